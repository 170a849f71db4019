#include "hamgrid/walk.hpp"

#include <algorithm>

namespace hamgrid {

void Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= out.size() || to >= out.size()) throw DomainError("edge endpoint out of range");
  out[from].push_back(to);
}

void sweep_walk_counts(const Digraph& g, std::size_t steps,
                       const std::function<void(std::size_t, const Integer&)>& visit) {
  const std::size_t V = g.vertex_count();
  if (V == 0) throw DomainError("walk enumeration on an empty graph");
  const std::size_t sink = g.sink();
  std::vector<Integer> cur(V), next(V);
  cur[g.source()] = 1;
  const Integer zero = 0;
  for (std::size_t k = 0;; ++k) {
    visit(k, cur[sink]);
    if (k == steps) break;
    for (auto& x : next) x = 0;
    for (std::size_t u = 0; u < V; ++u) {
      if (u == sink || sgn(cur[u]) == 0) continue;
      const mpz_srcptr src = cur[u].get_mpz_t();
      for (std::size_t v : g.out[u]) mpz_add(next[v].get_mpz_t(), next[v].get_mpz_t(), src);
    }
    std::swap(cur, next);
  }
}

std::vector<Integer> walk_counts(const Digraph& g, std::size_t steps) {
  std::vector<Integer> out;
  out.reserve(steps + 1);
  sweep_walk_counts(g, steps, [&](std::size_t, const Integer& a) { out.push_back(a); });
  return out;
}

namespace {

template <class T, class Fit>
WalkGF fit_generic(const std::function<std::vector<T>(std::size_t)>& terms,
                   std::size_t degree_bound, FitMode mode, Fit&& fit) {
  const std::size_t rigorous_window = 2 * degree_bound + 1;
  std::size_t window = mode == FitMode::Rigorous ? rigorous_window
                                                  : std::min<std::size_t>(33, rigorous_window);
  for (;;) {
    const std::size_t total = 3 * window;
    std::vector<T> seq = terms(total);
    const std::size_t max_order = (window - 1) / 2;
    std::optional<LinRec> rec = fit(std::span<const T>(seq.data(), window), max_order);
    if (rec) {
      std::vector<Rational> predicted = rec->terms(total);
      bool ok = true;
      for (std::size_t k = 0; k < total && ok; ++k) ok = predicted[k] == Rational(seq[k]);
      if (ok) {
        WalkGF out;
        out.gf = ratfunc_from_recurrence(*rec);
        out.recurrence = std::move(*rec);
        out.degree_bound = degree_bound;
        out.verified_terms = total;
        return out;
      }
    }
    if (window >= rigorous_window) {
      throw InternalError("no recurrence of order <= " + std::to_string(degree_bound) +
                          " survived verification");
    }
    window = std::min(2 * window + 1, rigorous_window);
  }
}

}  // namespace

WalkGF fit_series_gf(const std::function<std::vector<Integer>(std::size_t)>& terms,
                     std::size_t degree_bound, FitMode mode) {
  return fit_generic<Integer>(terms, degree_bound, mode,
                              [](std::span<const Integer> s, std::size_t max_order) {
                                return fit_min_recurrence_integer(s, max_order);
                              });
}

WalkGF fit_series_gf_rational(const std::function<std::vector<Rational>(std::size_t)>& terms,
                              std::size_t degree_bound, FitMode mode) {
  return fit_generic<Rational>(terms, degree_bound, mode,
                               [](std::span<const Rational> s, std::size_t max_order) {
                                 return fit_min_recurrence(s, max_order);
                               });
}

WalkGF walk_gf(const Digraph& g, FitMode mode) {
  return fit_series_gf([&](std::size_t n) { return walk_counts(g, n - 1); }, g.vertex_count(), mode);
}

WalkGF walk_gf(const WeightedDigraph<Rational>& g, FitMode mode) {
  return fit_series_gf_rational([&](std::size_t n) { return walk_weights(g, n - 1); },
                                g.vertex_count(), mode);
}

}  // namespace hamgrid
