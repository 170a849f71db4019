#include "hamgrid/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "hamgrid/errors.hpp"

namespace hamgrid {

// ---------------------------------------------------------------- CellMatrix

CellMatrix::CellMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DomainError("cell matrix needs at least one row and column");
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

std::size_t CellMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("cell index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

bool CellMatrix::at_or_zero(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) return false;
  return at(r, c);
}

CellMatrix CellMatrix::from_columns(const std::vector<Column>& columns) {
  if (columns.empty()) throw DomainError("cell matrix needs at least one column");
  CellMatrix a(columns.front().width(), static_cast<int>(columns.size()));
  for (int c = 0; c < a.cols_; ++c) {
    const Column& col = columns[static_cast<std::size_t>(c)];
    if (col.width() != a.rows_) throw DomainError("columns of different heights");
    for (int r = 0; r < a.rows_; ++r) a.set(r, c, col.at(r + 1));
  }
  return a;
}

CellMatrix CellMatrix::parse_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw DomainError("cell matrix needs at least one row");
  CellMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < a.rows_; ++r) {
    const auto& line = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(line.size()) != a.cols_) throw DomainError("ragged matrix rows");
    for (int c = 0; c < a.cols_; ++c) {
      char ch = line[static_cast<std::size_t>(c)];
      if (ch != '0' && ch != '1') throw DomainError("matrix rows must be 0/1 strings");
      a.set(r, c, ch == '1');
    }
  }
  return a;
}

Column CellMatrix::column(int c) const {
  std::uint32_t bits = 0;
  for (int r = 0; r < rows_; ++r) {
    if (at(r, c)) bits |= 1u << r;
  }
  return Column(rows_, bits);
}

std::vector<Column> CellMatrix::columns() const {
  std::vector<Column> out;
  for (int c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

int CellMatrix::row_ones(int r) const {
  int k = 0;
  for (int c = 0; c < cols_; ++c) k += at(r, c);
  return k;
}

std::string CellMatrix::to_string() const {
  std::string s;
  for (int r = 0; r < rows_; ++r) {
    if (r) s.push_back('\n');
    for (int c = 0; c < cols_; ++c) s.push_back(at(r, c) ? '1' : '0');
  }
  return s;
}

// ---------------------------------------------------------------- CycleEdges

Edge make_edge(Vertex a, Vertex b) {
  const int d = std::abs(a.row - b.row) + std::abs(a.col - b.col);
  if (d != 1) throw DomainError("edge endpoints are not lattice neighbours");
  return a < b ? Edge{a, b} : Edge{b, a};
}

CycleEdges::CycleEdges(int m, int n, std::vector<Edge> edges) : m_(m), n_(n), edges_(std::move(edges)) {
  if (m < 2 || n < 2) throw DomainError("cycle lattice must be at least 2 x 2");
  for (const auto& e : edges_) {
    for (const Vertex& v : {e.a, e.b}) {
      if (v.row < 0 || v.row >= m || v.col < 0 || v.col >= n) throw DomainError("edge outside the lattice");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool CycleEdges::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int CycleEdges::top_edges() const {
  int k = 0;
  for (const auto& e : edges_) k += e.a.row == 0 && e.b.row == 0;
  return k;
}

int CycleEdges::bottom_edges() const {
  int k = 0;
  for (const auto& e : edges_) k += e.a.row == m_ - 1 && e.b.row == m_ - 1;
  return k;
}

namespace {

std::vector<std::vector<Vertex>> adjacency(const CycleEdges& c) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(c.m() * c.n()));
  auto id = [&](const Vertex& v) { return static_cast<std::size_t>(v.row * c.n() + v.col); };
  for (const auto& e : c.edges()) {
    adj[id(e.a)].push_back(e.b);
    adj[id(e.b)].push_back(e.a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

std::string vertex_name(const Vertex& v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

}  // namespace

void CycleEdges::validate() const {
  auto adj = adjacency(*this);
  // Crossings first: they name the offending corner more directly.
  for (bool over : {true, false}) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const auto& l = adj[static_cast<std::size_t>(i * n_ + j)];
        if (over ? l.size() > 2 : l.size() < 2) {
          throw DomainError("vertex " + vertex_name({i, j}) + " has degree " + std::to_string(l.size()) +
                            ", expected 2");
        }
      }
    }
  }
  const auto order = traversal();
  if (order.size() != static_cast<std::size_t>(m_ * n_)) {
    throw DomainError("edges form " + std::string("more than one cycle; the cycle through (0,0) has ") +
                      std::to_string(order.size()) + " vertices");
  }
}

bool CycleEdges::is_hamiltonian_cycle() const {
  try {
    validate();
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<Vertex> CycleEdges::traversal() const {
  auto adj = adjacency(*this);
  std::vector<Vertex> order;
  const Vertex start{0, 0};
  const auto& first = adj[0];
  if (first.empty()) return order;
  Vertex prev = start, cur = first.front();
  order.push_back(start);
  while (!(cur == start)) {
    order.push_back(cur);
    if (order.size() > static_cast<std::size_t>(m_ * n_)) break;
    const auto& l = adj[static_cast<std::size_t>(cur.row * n_ + cur.col)];
    if (l.size() != 2) break;
    Vertex next = l[0] == prev ? l[1] : l[0];
    prev = cur;
    cur = next;
  }
  return order;
}

// ---------------------------------------------------------------- bijection

CycleEdges matrix_to_cycle(const CellMatrix& a) {
  const int m = a.rows() + 1, n = a.cols() + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      // horizontal edge (i,j)-(i,j+1): cells above and below
      if (a.at_or_zero(i - 1, j) != a.at_or_zero(i, j)) edges.push_back({{i, j}, {i, j + 1}});
    }
  }
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j < n; ++j) {
      // vertical edge (i,j)-(i+1,j): cells left and right
      if (a.at_or_zero(i, j - 1) != a.at_or_zero(i, j)) edges.push_back({{i, j}, {i + 1, j}});
    }
  }
  CycleEdges c(m, n, std::move(edges));
  c.validate();
  return c;
}

CellMatrix cycle_to_matrix(const CycleEdges& c) {
  c.validate();
  CellMatrix a(c.m() - 1, c.n() - 1);
  for (int r = 0; r < a.rows(); ++r) {
    bool inside = false;
    // Sweeping rightwards accumulates the crossings of the leftward ray.
    for (int col = 0; col < a.cols(); ++col) {
      if (c.contains({{r, col}, {r + 1, col}})) inside = !inside;
      a.set(r, col, inside);
    }
  }
  return a;
}

// ---------------------------------------------------------------- drawing

std::string render_ascii(const CycleEdges& c) {
  const int H = 2 * c.m() - 1, W = 2 * c.n() - 1;
  std::vector<std::string> grid(static_cast<std::size_t>(H), std::string(static_cast<std::size_t>(W), ' '));
  for (int i = 0; i < c.m(); ++i) {
    for (int j = 0; j < c.n(); ++j) grid[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(2 * j)] = '+';
  }
  for (const auto& e : c.edges()) {
    const int r = e.a.row + e.b.row, col = e.a.col + e.b.col;
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = e.a.row == e.b.row ? '-' : '|';
  }
  std::string out;
  for (int r = 0; r < H; ++r) {
    if (r) out.push_back('\n');
    out += grid[static_cast<std::size_t>(r)];
  }
  return out;
}

std::string render_svg(const CycleEdges& c, const RenderOptions& opts) {
  if (opts.cell_size <= 0 || opts.margin < 0 || opts.stroke_width <= 0) {
    throw DomainError("render options need positive sizes");
  }
  const int width = 2 * opts.margin + (c.n() - 1) * opts.cell_size;
  const int height = 2 * opts.margin + (c.m() - 1) * opts.cell_size;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
     << "<path d=\"";
  const auto order = c.traversal();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = opts.margin + order[k].col * opts.cell_size;
    const int y = opts.margin + order[k].row * opts.cell_size;
    os << (k == 0 ? "M" : " L") << x << " " << y;
  }
  os << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"" << opts.stroke_width
     << "\" stroke-linejoin=\"round\"/>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace hamgrid
