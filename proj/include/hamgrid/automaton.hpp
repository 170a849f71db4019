#ifndef HAMGRID_AUTOMATON_HPP
#define HAMGRID_AUTOMATON_HPP

// The column automaton. A Hamiltonian cycle of P_m x P_n is encoded as the
// (m-1) x (n-1) binary matrix of cells lying inside the cycle; reading that
// matrix column by column gives a word over states [column, partition],
// where the partition groups the 1-rows of the column that are already
// connected through 1-cells further left.
//
// Rows are numbered 1..M (top to bottom) in the public interface.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hamgrid {

/// One matrix column of height M. Bit i-1 of `bits` is row i.
class Column {
 public:
  static constexpr int kMaxWidth = 16;

  Column() = default;
  Column(int width, std::uint32_t bits);
  /// From a string of '0'/'1' characters, row 1 first.
  static Column parse(const std::string& text);
  static Column zeros(int width) { return Column(width, 0); }

  int width() const { return width_; }
  std::uint32_t bits() const { return bits_; }
  /// Row r in 1..width.
  bool at(int row) const { return (bits_ >> (row - 1)) & 1u; }
  int ones() const;
  bool empty() const { return bits_ == 0; }

  std::string to_string() const;

  friend bool operator==(const Column&, const Column&) = default;
  /// Lexicographic on the row-1-first bit string.
  friend std::strong_ordering operator<=>(const Column& a, const Column& b);

 private:
  int width_ = 0;
  std::uint32_t bits_ = 0;
};

/// Maximal runs of consecutive 1-rows, ascending, as inclusive [first,last].
struct RowInterval {
  int first;
  int last;
  friend bool operator==(const RowInterval&, const RowInterval&) = default;
};
std::vector<RowInterval> runs(const Column& c);

/// Set partition of the 1-rows of a column. Blocks are sorted and listed by
/// increasing minimum, which makes the representation canonical.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// Block index of a row, or -1.
  int block_of(int row) const;
  bool is_non_crossing() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// By the list of block minima, then block contents.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<std::vector<int>> blocks_;
};

struct SSState {
  Column column;
  Partition partition;

  std::string to_string() const;
  /// Parses "[11011,{{1,2},{4,5}}]".
  static SSState parse(const std::string& text);

  friend bool operator==(const SSState&, const SSState&) = default;
  friend std::strong_ordering operator<=>(const SSState& a, const SSState& b);
};

/// A class of enclosed zero rows adjacent to the column. Rows of one class
/// belong to the same zero region; closing all of them with 1-cells would
/// seal a hole.
struct Pocket {
  std::vector<int> rows;
  bool outside_connected = false;
};

/// Gap classes of a state. Gaps above the first or below the last 1-row are
/// not reported; every reported gap lies strictly between two 1-rows.
std::vector<Pocket> pockets(const SSState& s);

/// Start letters: every column with c_1 = c_M = 1 and no two consecutive
/// zeros, with the run decomposition as partition. Sorted canonically.
std::vector<SSState> starters(int width);
bool is_starter(const SSState& s);
bool is_ender(const SSState& s);

/// Successor of s under the next column w, or nullopt when w may not follow.
/// Throws DomainError on mismatched widths.
std::optional<SSState> transition(const SSState& s, const Column& w);

/// All states t with transition(s, w) == t for some w, sorted canonically.
std::vector<SSState> followers(const SSState& s);

/// Trimmed automaton. Index 0 is START, 1..N are the states in canonical
/// order, N+1 is END (vertex k+1 in the 1-based convention of SSdg).
class SSAutomaton {
 public:
  SSAutomaton() = default;
  SSAutomaton(int width, std::vector<SSState> states, std::vector<std::vector<std::size_t>> succ);

  int width() const { return width_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t vertex_count() const { return states_.size() + 2; }
  std::size_t start_vertex() const { return 0; }
  std::size_t end_vertex() const { return states_.size() + 1; }

  /// State behind vertex v in 1..N.
  const SSState& state(std::size_t vertex) const { return states_.at(vertex - 1); }
  const std::vector<SSState>& states() const { return states_; }
  /// Out-neighbours of vertex v (0-based vertex numbering, sorted).
  const std::vector<std::size_t>& successors(std::size_t vertex) const { return succ_.at(vertex); }
  bool starter(std::size_t vertex) const;
  bool ender(std::size_t vertex) const;
  std::optional<std::size_t> vertex_of(const SSState& s) const;
  std::size_t edge_count() const;

  friend bool operator==(const SSAutomaton&, const SSAutomaton&) = default;

 private:
  int width_ = 0;
  std::vector<SSState> states_;
  std::vector<std::vector<std::size_t>> succ_;
};

/// Breadth-first closure from the starters, restricted to states that can
/// still reach an ender.
SSAutomaton build_automaton(int width);

/// Cached variant: reuses the process-wide instance for this width, and when
/// cache_dir is non-empty loads/stores a serialized copy there.
const SSAutomaton& automaton_for(int width, const std::string& cache_dir = "");

}  // namespace hamgrid

#endif  // HAMGRID_AUTOMATON_HPP
