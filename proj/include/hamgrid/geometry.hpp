#ifndef HAMGRID_GEOMETRY_HPP
#define HAMGRID_GEOMETRY_HPP

// Interior-cell matrices, cycle edge sets, and their drawings.
//
// Coordinates: lattice vertex (i, j) has row i in 0..m-1 (downward) and
// column j in 0..n-1 (rightward), (0, 0) top-left. Cell (r, c) of the matrix,
// 0-based, is the unit square with top-left vertex (r, c).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hamgrid/automaton.hpp"

namespace hamgrid {

/// rows x cols binary matrix (rows = m - 1, cols = n - 1).
class CellMatrix {
 public:
  CellMatrix() = default;
  CellMatrix(int rows, int cols);
  /// From matrix columns (each a Column of height rows).
  static CellMatrix from_columns(const std::vector<Column>& columns);
  /// From text rows of '0'/'1', one string per matrix row.
  static CellMatrix parse_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
  /// Exterior cells read as 0.
  bool at_or_zero(int r, int c) const;
  void set(int r, int c, bool v) { bits_[index(r, c)] = v ? 1 : 0; }
  Column column(int c) const;
  std::vector<Column> columns() const;
  int row_ones(int r) const;

  /// Rows of 0/1 characters separated by newlines (no trailing newline).
  std::string to_string() const;

  friend bool operator==(const CellMatrix&, const CellMatrix&) = default;
  friend auto operator<=>(const CellMatrix&, const CellMatrix&) = default;

 private:
  std::size_t index(int r, int c) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct Vertex {
  int row;
  int col;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Unit lattice edge with a < b.
struct Edge {
  Vertex a;
  Vertex b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge set on the m x n vertex lattice, kept sorted.
class CycleEdges {
 public:
  CycleEdges() = default;
  CycleEdges(int m, int n, std::vector<Edge> edges);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(const Edge& e) const;
  /// Number of edges along the top boundary (row 0).
  int top_edges() const;
  int bottom_edges() const;

  /// Throws DomainError naming the first offending vertex unless every
  /// vertex has degree 2 and the edges form one cycle through all m*n.
  void validate() const;
  bool is_hamiltonian_cycle() const;
  /// Vertices in cycle order from (0,0), first stepping to the smaller
  /// neighbour.
  std::vector<Vertex> traversal() const;

  friend bool operator==(const CycleEdges&, const CycleEdges&) = default;
  friend auto operator<=>(const CycleEdges&, const CycleEdges&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
};

Edge make_edge(Vertex a, Vertex b);

/// Boundary of the interior region. Throws DomainError if the matrix does
/// not describe a Hamiltonian cycle.
CycleEdges matrix_to_cycle(const CellMatrix& a);
/// Even-odd interior test with a leftward ray from each cell centre.
CellMatrix cycle_to_matrix(const CycleEdges& c);

struct RenderOptions {
  enum class Format { Ascii, Svg };
  Format format = Format::Ascii;
  int cell_size = 20;
  int margin = 10;
  int stroke_width = 2;
};

/// '+' at vertices, '-' and '|' on edges, spaces elsewhere; (2m-1) lines of
/// 2n-1 characters joined by '\n'.
std::string render_ascii(const CycleEdges& c);
/// Minimal static SVG with a single closed path.
std::string render_svg(const CycleEdges& c, const RenderOptions& opts = {});

}  // namespace hamgrid

#endif  // HAMGRID_GEOMETRY_HPP
