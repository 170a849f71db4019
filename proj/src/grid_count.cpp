#include "hamgrid/grid_count.hpp"

#include <filesystem>
#include <sstream>

#include "hamgrid/errors.hpp"
#include "hamgrid/serialize.hpp"

namespace hamgrid {

namespace {

void check_grid(int m, int n) {
  if (m < 2 || n < 2) {
    throw DomainError("grid dimensions must be at least 2 (got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ")");
  }
}

void check_width(int m) {
  if (m < 2) throw DomainError("grid height m must be at least 2");
  if (m - 1 > kMaxAutomatonWidth) {
    throw ResourceError("grid height m=" + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxAutomatonWidth + 1));
  }
}

std::string gf_cache_path(const std::string& dir, int m) {
  return (std::filesystem::path(dir) / ("gf-m" + std::to_string(m) + ".json")).string();
}

Exponents marker_exponents(const Column& c, const WeightSpec& spec, bool with_z) {
  Exponents e{};
  if (with_z) e[0] = 1;
  for (int r = 1; r <= c.width(); ++r) {
    if (c.at(r) && spec.active(r)) e[static_cast<std::size_t>(r)] = 1;
  }
  return e;
}

void check_spec(int m, const WeightSpec& spec) {
  if (spec.width() != m - 1) {
    throw DomainError("weight spec has " + std::to_string(spec.width()) + " rows, expected " +
                      std::to_string(m - 1));
  }
}

// Fraction-free Gaussian elimination.
IntMultiPoly bareiss_determinant(std::vector<std::vector<IntMultiPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return IntMultiPoly::constant(0, Integer(1));
  IntMultiPoly prev = IntMultiPoly::constant(0, Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return IntMultiPoly();
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntMultiPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(t, prev);
      }
      a[i][k] = IntMultiPoly();
    }
    prev = a[k][k];
  }
  IntMultiPoly det = std::move(a[n - 1][n - 1]);
  if (negate) det = -det;
  return det;
}

}  // namespace

WeightSpec WeightSpec::rows(int M, const std::vector<int>& rows) {
  WeightSpec s = none(M);
  for (int r : rows) {
    if (r < 1 || r > M) throw DomainError("marked row " + std::to_string(r) + " outside 1.." + std::to_string(M));
    s.active_[static_cast<std::size_t>(r - 1)] = true;
  }
  return s;
}

int WeightSpec::active_count() const {
  int c = 0;
  for (bool b : active_) c += b;
  return c;
}

Digraph automaton_digraph(const SSAutomaton& a) {
  Digraph g(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    for (std::size_t t : a.successors(v)) g.add_edge(v, t);
  }
  return g;
}

Integer count_cycles(int m, int n, const GridOptions& opts) {
  check_grid(m, n);
  if (m - 1 > kMaxAutomatonWidth && n - 1 <= kMaxAutomatonWidth) std::swap(m, n);
  check_width(m);
  const SSAutomaton& a = automaton_for(m - 1, opts.cache_dir);
  Digraph g = automaton_digraph(a);
  Integer result;
  sweep_walk_counts(g, static_cast<std::size_t>(n), [&](std::size_t k, const Integer& v) {
    if (k == static_cast<std::size_t>(n)) result = v;
  });
  return result;
}

std::vector<Integer> count_series(int m, std::size_t N, const GridOptions& opts) {
  check_width(m);
  Digraph g = automaton_digraph(automaton_for(m - 1, opts.cache_dir));
  return walk_counts(g, N);
}

CountGF gf_count_detailed(int m, const GridOptions& opts) {
  check_width(m);
  const bool cached = !opts.cache_dir.empty();
  if (cached && !opts.no_cache) {
    if (auto text = read_file(gf_cache_path(opts.cache_dir, m))) {
      try {
        auto j = nlohmann::json::parse(*text);
        if (j.value("format", "") == "count-gf" && j.value("version", 0) == kFormatVersion &&
            j.value("m", 0) == m) {
          CountGF out;
          out.gf = ratfunc_from_json(j.at("gf"));
          out.degree_bound = j.at("degree_bound").get<std::size_t>();
          out.verified_terms = j.at("verified_terms").get<std::size_t>();
          std::vector<Rational> coeffs;
          for (const auto& c : j.at("recurrence")) coeffs.push_back(rational_from_json(c));
          std::vector<Rational> init;
          for (const auto& c : j.at("initial")) init.push_back(rational_from_json(c));
          out.recurrence = LinRec{std::move(coeffs), std::move(init)};
          out.from_cache = true;
          return out;
        }
      } catch (const std::exception&) {
        // fall through and recompute
      }
    }
  }
  const SSAutomaton& a = automaton_for(m - 1, opts.cache_dir);
  Digraph g = automaton_digraph(a);
  WalkGF w = walk_gf(g, opts.fit_mode);
  CountGF out{w.gf, w.recurrence, w.degree_bound, w.verified_terms, false};
  if (cached) {
    nlohmann::json rec = nlohmann::json::array(), init = nlohmann::json::array();
    for (const auto& c : out.recurrence.coefficients) rec.push_back(to_json(c));
    for (const auto& c : out.recurrence.initial) init.push_back(to_json(c));
    nlohmann::json j{{"format", "count-gf"},
                     {"version", kFormatVersion},
                     {"m", m},
                     {"gf", to_json(out.gf)},
                     {"recurrence", rec},
                     {"initial", init},
                     {"degree_bound", out.degree_bound},
                     {"verified_terms", out.verified_terms}};
    write_file_atomic(gf_cache_path(opts.cache_dir, m), j.dump());
  }
  return out;
}

RatFunc gf_count(int m, const GridOptions& opts) { return gf_count_detailed(m, opts).gf; }

bool WeightedGF::equivalent(const IntMultiPoly& num, const IntMultiPoly& den) const {
  return numerator * den == num * denominator;
}

std::string WeightedGF::to_string() const {
  auto names = grid_variable_names(width);
  return "(" + numerator.to_string(names) + ")/(" + denominator.to_string(names) + ")";
}

WeightedGF gf_weighted(int m, const WeightSpec& spec) {
  check_width(m);
  check_spec(m, spec);
  const SSAutomaton& a = automaton_for(m - 1);
  const std::size_t S = a.state_count();
  if (S > kMaxWeightedGfStates) {
    throw ResourceError("symbolic weighted GF for m=" + std::to_string(m) + " needs " +
                        std::to_string(S) + " states; the limit is " +
                        std::to_string(kMaxWeightedGfStates));
  }
  const std::size_t nvars = static_cast<std::size_t>(m);
  const Exponents z = make_exponents({1});
  std::vector<IntMultiPoly> enter(S);
  for (std::size_t j = 0; j < S; ++j) {
    enter[j] = IntMultiPoly::monomial(nvars, marker_exponents(a.states()[j].column, spec, true));
  }
  // A = I - T over the states (vertex v <-> row v-1).
  std::vector<std::vector<IntMultiPoly>> A(S, std::vector<IntMultiPoly>(S, IntMultiPoly(nvars)));
  std::vector<IntMultiPoly> u(S, IntMultiPoly(nvars)), v(S, IntMultiPoly(nvars));
  for (std::size_t i = 0; i < S; ++i) A[i][i] = IntMultiPoly::constant(nvars, Integer(1));
  for (std::size_t t : a.successors(0)) u[t - 1] = enter[t - 1];
  for (std::size_t s = 1; s <= S; ++s) {
    for (std::size_t t : a.successors(s)) {
      if (t == a.end_vertex()) {
        v[s - 1] = IntMultiPoly::monomial(nvars, z);
      } else {
        A[s - 1][t - 1] -= enter[t - 1];
      }
    }
  }
  auto B = A;
  for (std::size_t i = 0; i < S; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < S; ++j) {
      if (!u[j].is_zero()) B[i][j] -= v[i] * u[j];
    }
  }
  IntMultiPoly detA = bareiss_determinant(std::move(A));
  IntMultiPoly detB = bareiss_determinant(std::move(B));
  WeightedGF out;
  out.width = m - 1;
  out.numerator = detA - detB;
  out.denominator = std::move(detA);
  return out;
}

IntMultiPoly weight_enumerator_int(int m, int n, const WeightSpec& spec) {
  check_grid(m, n);
  check_width(m);
  check_spec(m, spec);
  const SSAutomaton& a = automaton_for(m - 1);
  const std::size_t nvars = static_cast<std::size_t>(m);
  auto g = automaton_weighted_digraph<IntMultiPoly>(
      a,
      [&](const Column& c) { return IntMultiPoly::monomial(nvars, marker_exponents(c, spec, false)); },
      IntMultiPoly::constant(nvars, Integer(1)));
  IntMultiPoly result(nvars);
  sweep_walks(
      g, static_cast<std::size_t>(n),
      [&](std::size_t k, const IntMultiPoly& p) {
        if (k == static_cast<std::size_t>(n)) result = p;
      },
      [](IntMultiPoly& p, std::size_t) {
        if (p.size() > kMaxEnumeratorTerms) {
          throw ResourceError("weight enumerator exceeds " + std::to_string(kMaxEnumeratorTerms) +
                              " terms per state");
        }
      });
  return result;
}

MultiPoly weight_enumerator(int m, int n, const WeightSpec& spec) {
  return to_rational(weight_enumerator_int(m, n, spec));
}

Integer monomial_coefficient(int m, int n, const std::vector<std::optional<unsigned>>& exponents) {
  check_grid(m, n);
  check_width(m);
  if (exponents.size() != static_cast<std::size_t>(m - 1)) {
    throw DomainError("exponent vector has " + std::to_string(exponents.size()) +
                      " entries, expected " + std::to_string(m - 1));
  }
  std::vector<bool> active;
  Exponents target{};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    active.push_back(exponents[i].has_value());
    if (exponents[i]) {
      if (*exponents[i] > 0xFFFFu) throw DomainError("exponent too large");
      target[i + 1] = static_cast<std::uint16_t>(*exponents[i]);
    }
  }
  WeightSpec spec(active);
  const SSAutomaton& a = automaton_for(m - 1);
  const std::size_t nvars = static_cast<std::size_t>(m);
  auto g = automaton_weighted_digraph<IntMultiPoly>(
      a,
      [&](const Column& c) { return IntMultiPoly::monomial(nvars, marker_exponents(c, spec, false)); },
      IntMultiPoly::constant(nvars, Integer(1)));
  IntMultiPoly result(nvars);
  // A term survives only if every marked exponent can still reach its
  // target: at most one more 1 per remaining step.
  auto prune = [&](IntMultiPoly& p, std::size_t remaining) {
    p.keep_if([&](const Exponents& e) {
      for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (!active[i]) continue;
        const std::size_t have = e[i + 1], want = target[i + 1];
        if (have > want || have + remaining < want) return false;
      }
      return true;
    });
  };
  sweep_walks(
      g, static_cast<std::size_t>(n),
      [&](std::size_t k, const IntMultiPoly& p) {
        if (k == static_cast<std::size_t>(n)) result = p;
      },
      prune);
  return result.coefficient(target);
}

}  // namespace hamgrid
