#ifndef HAMGRID_GRID_COUNT_HPP
#define HAMGRID_GRID_COUNT_HPP

// Hamiltonian cycle counts of P_m x P_n and their generating functions.
//
// Conventions: the automaton has width M = m - 1, a cycle is a word of n - 1
// columns, and every column plus one global step contribute a factor z, so
// the coefficient of z^n belongs to P_m x P_n.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamgrid/algebra.hpp"
#include "hamgrid/automaton.hpp"
#include "hamgrid/multipoly.hpp"
#include "hamgrid/walk.hpp"

namespace hamgrid {

/// Largest automaton width used directly; taller grids are transposed.
inline constexpr int kMaxAutomatonWidth = 11;

struct GridOptions {
  /// Directory for the persisted GF and automaton cache; empty disables it.
  std::string cache_dir;
  /// Bypass reading the cache (results are still written when cache_dir is set).
  bool no_cache = false;
  FitMode fit_mode = FitMode::Adaptive;
};

/// Per-row marker selection: row i carries w_i when active[i-1], else 1.
class WeightSpec {
 public:
  WeightSpec() = default;
  explicit WeightSpec(std::vector<bool> active) : active_(std::move(active)) {}
  static WeightSpec all(int M) { return WeightSpec(std::vector<bool>(static_cast<std::size_t>(M), true)); }
  static WeightSpec none(int M) { return WeightSpec(std::vector<bool>(static_cast<std::size_t>(M), false)); }
  /// Active rows given 1-based.
  static WeightSpec rows(int M, const std::vector<int>& rows);

  int width() const { return static_cast<int>(active_.size()); }
  bool active(int row) const { return active_.at(static_cast<std::size_t>(row - 1)); }
  int active_count() const;

 private:
  std::vector<bool> active_;
};

/// Walk graph of the automaton: vertex 0 START, last vertex END.
Digraph automaton_digraph(const SSAutomaton& a);

/// Weighted walk graph; entering a state with column c costs weight(c),
/// entering END costs end_weight.
template <class W, class F>
WeightedDigraph<W> automaton_weighted_digraph(const SSAutomaton& a, F&& weight, const W& end_weight) {
  WeightedDigraph<W> g(a.vertex_count());
  const std::size_t end = a.end_vertex();
  std::vector<W> state_weight;
  state_weight.reserve(a.state_count());
  for (const auto& s : a.states()) state_weight.push_back(weight(s.column));
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    for (std::size_t t : a.successors(v)) {
      g.add_edge(v, t, t == end ? end_weight : state_weight[t - 1]);
    }
  }
  return g;
}

Integer count_cycles(int m, int n, const GridOptions& opts = {});
/// Entry n is count_cycles(m, n) for n >= 2 and 0 below.
std::vector<Integer> count_series(int m, std::size_t N, const GridOptions& opts = {});

struct CountGF {
  RatFunc gf;
  LinRec recurrence;
  std::size_t degree_bound = 0;
  std::size_t verified_terms = 0;
  bool from_cache = false;
};
CountGF gf_count_detailed(int m, const GridOptions& opts = {});
RatFunc gf_count(int m, const GridOptions& opts = {});

/// Weighted generating function as an (unreduced) quotient of polynomials
/// in z, w_1..w_M, normalized so the denominator has constant term 1.
struct WeightedGF {
  int width = 0;
  IntMultiPoly numerator;
  IntMultiPoly denominator;

  /// Equality as rational functions (cross multiplication).
  bool equivalent(const IntMultiPoly& num, const IntMultiPoly& den) const;
  std::string to_string() const;
};

/// Symbolic weighted GF via determinants of I - T. Guarded: at most
/// kMaxWeightedGfStates automaton states.
inline constexpr std::size_t kMaxWeightedGfStates = 40;
WeightedGF gf_weighted(int m, const WeightSpec& spec);

/// Coefficient of z^n of the weighted GF, by a polynomial-weighted sweep.
/// Guarded by max_terms per vertex value.
inline constexpr std::size_t kMaxEnumeratorTerms = 5'000'000;
MultiPoly weight_enumerator(int m, int n, const WeightSpec& spec);
IntMultiPoly weight_enumerator_int(int m, int n, const WeightSpec& spec);

/// Coefficient of one monomial of weight_enumerator. exponents[i] is the
/// target exponent of w_{i+1}, nullopt leaves that row unmarked.
Integer monomial_coefficient(int m, int n, const std::vector<std::optional<unsigned>>& exponents);

}  // namespace hamgrid

#endif  // HAMGRID_GRID_COUNT_HPP
