#ifndef HAMGRID_WALK_HPP
#define HAMGRID_WALK_HPP

// Step-indexed walk enumeration on sparse digraphs with vertex 0 as source
// and the last vertex as sink. Walks end on their first arrival at the
// sink: out-edges of the sink are ignored.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hamgrid/algebra.hpp"
#include "hamgrid/errors.hpp"
#include "hamgrid/multipoly.hpp"

namespace hamgrid {

/// Multiplicative identity of a weight domain.
template <class W>
struct WeightTraits {
  static W one() { return W(1); }
};

template <class C>
struct WeightTraits<BasicMultiPoly<C>> {
  static BasicMultiPoly<C> one() { return BasicMultiPoly<C>::constant(0, C(1)); }
};

struct Digraph {
  std::vector<std::vector<std::size_t>> out;

  explicit Digraph(std::size_t vertices = 0) : out(vertices) {}
  std::size_t vertex_count() const { return out.size(); }
  std::size_t source() const { return 0; }
  std::size_t sink() const { return out.size() - 1; }
  void add_edge(std::size_t from, std::size_t to);
};

/// W needs value-initialization to zero, += and *.
template <class W>
struct WeightedDigraph {
  std::vector<std::vector<std::pair<std::size_t, W>>> out;

  explicit WeightedDigraph(std::size_t vertices = 0) : out(vertices) {}
  std::size_t vertex_count() const { return out.size(); }
  std::size_t source() const { return 0; }
  std::size_t sink() const { return out.size() - 1; }
  void add_edge(std::size_t from, std::size_t to, W weight) {
    if (from >= out.size() || to >= out.size()) throw DomainError("edge endpoint out of range");
    out[from].emplace_back(to, std::move(weight));
  }
};

struct NoPrune {
  template <class W>
  void operator()(W&, std::size_t) const {}
};

/// Calls visit(k, weight) with the total weight a_k of source->sink walks of
/// length k, for k = 0..steps. After each step, prune(value, remaining) may
/// drop parts of a vertex value that cannot contribute within `remaining`
/// further steps.
template <class W, class Visit, class Prune = NoPrune>
void sweep_walks(const WeightedDigraph<W>& g, std::size_t steps, Visit&& visit, Prune prune = {}) {
  const std::size_t V = g.vertex_count();
  if (V == 0) throw DomainError("walk enumeration on an empty graph");
  const std::size_t sink = g.sink();
  std::vector<W> cur(V), next(V);
  std::vector<bool> live(V, false), next_live(V, false);
  cur[g.source()] = WeightTraits<W>::one();
  live[g.source()] = true;
  for (std::size_t k = 0;; ++k) {
    visit(k, live[sink] ? cur[sink] : W{});
    if (k == steps) break;
    std::fill(next_live.begin(), next_live.end(), false);
    for (std::size_t v = 0; v < V; ++v) next[v] = W{};
    for (std::size_t u = 0; u < V; ++u) {
      if (!live[u] || u == sink) continue;
      for (const auto& [v, w] : g.out[u]) {
        next[v] += cur[u] * w;
        next_live[v] = true;
      }
    }
    const std::size_t remaining = steps - k - 1;
    for (std::size_t v = 0; v < V; ++v) {
      if (next_live[v]) prune(next[v], remaining);
    }
    std::swap(cur, next);
    std::swap(live, next_live);
  }
}

template <class W, class Prune = NoPrune>
std::vector<W> walk_weights(const WeightedDigraph<W>& g, std::size_t steps, Prune prune = {}) {
  std::vector<W> out;
  out.reserve(steps + 1);
  sweep_walks(g, steps, [&](std::size_t, const W& a) { out.push_back(a); }, prune);
  return out;
}

/// Unit-weight specialisation: a_k is the number of source->sink walks.
void sweep_walk_counts(const Digraph& g, std::size_t steps,
                       const std::function<void(std::size_t, const Integer&)>& visit);
std::vector<Integer> walk_counts(const Digraph& g, std::size_t steps);

/// Rational generating function of a walk series together with the
/// recurrence it came from.
struct WalkGF {
  RatFunc gf;
  LinRec recurrence;
  /// Theoretical bound on the recurrence order (vertex count).
  std::size_t degree_bound = 0;
  /// Number of series terms the recurrence was checked against.
  std::size_t verified_terms = 0;
};

enum class FitMode {
  /// Growing windows; each candidate is re-verified on twice as many
  /// further terms.
  Adaptive,
  /// Single window of 2 * bound + 1 terms, which determines the recurrence.
  Rigorous,
};

/// Fits a recurrence to the integer series produced by `terms(count)`.
/// Throws InternalError if nothing survives verification at the bound.
WalkGF fit_series_gf(const std::function<std::vector<Integer>(std::size_t)>& terms,
                     std::size_t degree_bound, FitMode mode = FitMode::Adaptive);
WalkGF fit_series_gf_rational(const std::function<std::vector<Rational>(std::size_t)>& terms,
                              std::size_t degree_bound, FitMode mode = FitMode::Adaptive);

WalkGF walk_gf(const Digraph& g, FitMode mode = FitMode::Adaptive);
WalkGF walk_gf(const WeightedDigraph<Rational>& g, FitMode mode = FitMode::Adaptive);

}  // namespace hamgrid

#endif  // HAMGRID_WALK_HPP
