// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--fast | --slow | --all]
// --fast (default) runs everything except the P_10 x P_10000 count.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamgrid/automaton.hpp"
#include "hamgrid/errors.hpp"
#include "hamgrid/geometry.hpp"
#include "hamgrid/grid_count.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/sampler.hpp"
#include "hamgrid/statistics.hpp"
#include "printed_p4x10.hpp"

using namespace hamgrid;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::set<std::string> state_strings(const std::vector<SSState>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.to_string());
  return out;
}

Outcome alphabet() {
  Outcome r;
  SSAutomaton a = build_automaton(5);
  std::set<std::string> columns;
  int twin = 0;
  for (const auto& s : a.states()) {
    columns.insert(s.column.to_string());
    twin += s.column.to_string() == "11011";
  }
  const std::set<std::string> printed{"00001", "00010", "00100", "00101", "00111", "01000", "01001",
                                      "01010", "01110", "10000", "10001", "10010", "10100", "10101",
                                      "10111", "11011", "11100", "11101", "11111"};
  r.require(a.state_count() == 32, std::to_string(a.state_count()) + " states");
  r.require(columns == printed, "column set differs");
  r.require(twin == 2, "states on 11011: " + std::to_string(twin));
  return r;
}

Outcome followers_golden() {
  Outcome r;
  auto f = followers(SSState::parse("[11011,{{1,2},{4,5}}]"));
  const std::set<std::string> printed{"[01001,{{2},{5}}]", "[01010,{{2},{4}}]", "[01110,{{2,3,4}}]",
                                      "[10001,{{1},{5}}]", "[10010,{{1},{4}}]"};
  r.require(f.size() == 5 && state_strings(f) == printed, "follower set differs");
  return r;
}

Outcome starters_enders() {
  Outcome r;
  r.require(state_strings(starters(4)) ==
                std::set<std::string>{"[1011,{{1},{3,4}}]", "[1101,{{1,2},{4}}]", "[1111,{{1,2,3,4}}]"},
            "starters differ");
  SSAutomaton a = build_automaton(4);
  std::vector<SSState> ends;
  for (std::size_t v = 1; v <= a.state_count(); ++v) {
    if (a.ender(v)) ends.push_back(a.state(v));
  }
  r.require(state_strings(ends) ==
                std::set<std::string>{"[1011,{{1,3,4}}]", "[1101,{{1,2,4}}]", "[1111,{{1,2,3,4}}]"},
            "enders differ");
  return r;
}

Outcome digraph3() {
  Outcome r;
  SSAutomaton a = build_automaton(3);
  const std::vector<std::string> legend{"[001,{{3}}]", "[010,{{2}}]", "[100,{{1}}]", "[101,{{1,3}}]",
                                        "[101,{{1},{3}}]", "[111,{{1,2,3}}]"};
  const std::vector<std::vector<std::size_t>> printed{{6, 7}, {6, 7}, {7}, {6, 7}, {2, 4, 5, 8}, {6, 7}, {2, 3, 4, 5, 8}, {}};
  // Printed vertex k: 1 = START, 2..7 the legend states in order, 8 = END.
  auto ours = [&](std::size_t k) -> std::size_t {
    if (k == 1) return a.start_vertex();
    if (k == 8) return a.end_vertex();
    for (std::size_t v = 1; v <= a.state_count(); ++v) {
      if (a.state(v).to_string() == legend[k - 2]) return v;
    }
    throw InternalError("legend state missing: " + legend[k - 2]);
  };
  r.require(a.vertex_count() == 8, "vertex count");
  std::size_t edges = 0;
  for (std::size_t k = 1; k <= 8; ++k) {
    std::set<std::size_t> want;
    for (std::size_t t : printed[k - 1]) want.insert(ours(t));
    const auto& succ = a.successors(ours(k));
    edges += succ.size();
    r.require(std::set<std::size_t>(succ.begin(), succ.end()) == want,
              "successors of printed vertex " + std::to_string(k));
  }
  r.require(edges == 18, "edge count");
  return r;
}

Outcome gf_golden() {
  Outcome r;
  // -z^2 / (z^4 - 2z^3 + 2z^2 + 2z - 1)
  const RatFunc four(UniPoly{0, 0, -1}, UniPoly{-1, 2, 2, -2, 1});
  // -z^2 (3z^2 + 1) / (2z^6 + 11z^2 - 1)
  const RatFunc five(UniPoly{0, 0, -1, 0, -3}, UniPoly{-1, 0, 11, 0, 0, 0, 2});
  r.require(gf_count(4) == four, "gf_count(4) differs");
  r.require(gf_count(5) == five, "gf_count(5) differs");
  return r;
}

Outcome series10() {
  Outcome r;
  const std::vector<std::string> printed{"1", "16", "1517", "18684", "1024028", "17066492", "681728204",
                                         "13916993782", "467260456608"};
  auto s = count_series(10, 10);
  r.require(s.size() == 11, "series length");
  for (std::size_t k = 2; k <= 10 && r.ok; ++k) {
    r.require(s[k].get_str() == printed[k - 2], "term " + std::to_string(k) + " = " + s[k].get_str());
  }
  return r;
}

Outcome count10x100() {
  Outcome r;
  const std::string printed =
      "2841755307998403180696485173480879907420461708673514070665759422586711"
      "26855416799214435461577164935511762299757966788827828321166383429987198";
  const std::string got = count_cycles(10, 100).get_str();
  r.require(got == printed, "digits differ");
  if (r.ok) r.note = std::to_string(got.size()) + " digits, all equal to the printed value";
  return r;
}

Outcome count10x10000() {
  Outcome r;
  // Printed: 8.399066204805426684770915677726152158842 * 10^14310, i.e. the
  // count rounded to 40 significant digits.
  const std::string printed = "8399066204805426684770915677726152158842";
  const Integer c = count_cycles(10, 10000);
  const std::string s = c.get_str();
  const long exponent = static_cast<long>(s.size()) - 1;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent - 39));
  Integer head = (2 * c + scale) / (2 * scale);  // round half up
  r.require(exponent == 14310, "exponent " + std::to_string(exponent));
  r.require(head.get_str() == printed, "leading digits " + head.get_str());
  r.note = r.ok ? "leading digits " + s.substr(0, 45) + "..." : r.note;
  return r;
}

Outcome weighted_golden() {
  Outcome r;
  WeightedGF g = gf_weighted(4, WeightSpec::all(3));
  IntMultiPoly num(4), den(4);
  num.add_term(make_exponents({2, 1, 1, 1}), -1);
  den.add_term(make_exponents({4, 3, 2, 3}), 1);
  den.add_term(make_exponents({3, 2, 2, 2}), -2);
  den.add_term(make_exponents({2, 2, 1, 1}), 1);
  den.add_term(make_exponents({2, 2, 0, 2}), -1);
  den.add_term(make_exponents({2, 1, 2, 1}), 1);
  den.add_term(make_exponents({2, 1, 1, 2}), 1);
  den.add_term(make_exponents({1, 1, 0, 1}), 2);
  den.add_term(make_exponents({0, 0, 0, 0}), -1);
  r.require(g.equivalent(num, den), "weighted GF differs");

  IntMultiPoly p = weight_enumerator_int(4, 10, WeightSpec::all(3));
  r.require(p.size() == printed::kP4x10.size(), std::to_string(p.size()) + " terms");
  for (std::size_t i = 0; i < printed::kP4x10.size(); ++i) {
    const auto& t = printed::kP4x10[i];
    const Integer c = p.coefficient(make_exponents({0, t.a1, t.a2, t.a3}));
    r.require(c == t.coefficient, "term " + std::to_string(i + 1) + " has coefficient " + c.get_str());
  }
  r.require(p.coefficient(make_exponents({0, 9, 3, 7})) == 126, "126 at w1^9 w2^3 w3^7");
  // The one printed coefficient we do not reproduce: it reads 7, contradicting
  // both the printed total and its own mirror image.
  const auto& typo = printed::kP4x10[printed::kTypoIndex];
  const auto& mirror = printed::kP4x10[18];
  long printed_total = 0;
  for (const auto& t : printed::kP4x10) printed_total += t.coefficient;
  printed_total += printed::kTypoPrinted - typo.coefficient;
  r.require(printed_total + 60 == 1517 && mirror.a1 == typo.a3 && mirror.a3 == typo.a1 && mirror.coefficient == 67,
            "typo argument");
  if (r.ok) {
    r.note = "24 printed terms verbatim; w1^8 w2^5 w3^6 is 67 where the text prints 7 "
             "(printed terms would sum to " + std::to_string(printed_total) +
             ", not 1517; its mirror w1^6 w2^5 w3^8 is printed as 67)";
  }
  return r;
}

Outcome monomials() {
  Outcome r;
  r.require(monomial_coefficient(4, 100, {90u, 31u, 78u}).get_str() == "1113455025360859674900898483836789708",
            "(4,100,(90,31,78))");
  r.require(monomial_coefficient(6, 100, {80u, std::nullopt, std::nullopt, std::nullopt, std::nullopt}).get_str() ==
                "5769998174321676578317324842520250953447414723592327870562345553858388042",
            "(6,100,top=80)");
  return r;
}

// Accepted words of exactly L letters, as matrices.
void accepted(const SSAutomaton& a, std::size_t v, int L, std::vector<Column>& word, std::set<CellMatrix>& out) {
  for (std::size_t t : a.successors(v)) {
    if (t == a.end_vertex()) {
      if (static_cast<int>(word.size()) == L) out.insert(CellMatrix::from_columns(word));
      continue;
    }
    if (static_cast<int>(word.size()) == L) continue;
    word.push_back(a.state(t).column);
    accepted(a, t, L, word, out);
    word.pop_back();
  }
}

Outcome oracle_equivalence() {
  Outcome r;
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 6; ++n) {
      const std::string at = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      auto cycles = enumerate_cycles_bruteforce(m, n);
      r.require(Integer(static_cast<unsigned long>(cycles.size())) == count_cycles(m, n), "count at " + at);
      std::set<CellMatrix> via_oracle;
      for (const auto& c : cycles) {
        CellMatrix a = cycle_to_matrix(c);
        r.require(matrix_to_cycle(a) == c, "round trip at " + at);
        via_oracle.insert(a);
      }
      std::set<CellMatrix> via_automaton;
      std::vector<Column> word;
      accepted(automaton_for(m - 1), 0, n - 1, word, via_automaton);
      r.require(via_oracle == via_automaton, "accepted matrices at " + at);
      for (const auto& a : via_automaton) r.require(validate_matrix_global(a), "global validity at " + at);
    }
  }
  return r;
}

UniPoly z_part(const IntMultiPoly& p) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.sorted_terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] += v;
  }
  return UniPoly(c);
}

Outcome properties() {
  Outcome r;
  for (int m = 2; m <= 7; ++m) {
    for (int n = 2; n <= 7; ++n) r.require(count_cycles(m, n) == count_cycles(n, m), "symmetry");
  }
  for (int m = 3; m <= 9; m += 2) {
    for (int n = 3; n <= 9; n += 2) r.require(count_cycles(m, n) == 0, "odd x odd");
  }
  for (int M = 1; M <= 8; ++M) {
    for (const auto& s : automaton_for(M).states()) r.require(s.partition.is_non_crossing(), "crossing partition");
  }
  for (int m = 2; m <= 5; ++m) {
    WeightedGF g = gf_weighted(m, WeightSpec::all(m - 1));
    r.require(RatFunc(z_part(g.numerator), z_part(g.denominator)) == gf_count(m), "specialized GF");
    for (int n = 2; n <= 9; ++n) {
      IntMultiPoly p = weight_enumerator_int(m, n, WeightSpec::all(m - 1));
      r.require(p.sum_of_coefficients() == count_cycles(m, n), "specialized enumerator");
      for (const auto& [e, c] : p.sorted_terms()) {
        Exponents f = e;
        for (int i = 1; i < m; ++i) f[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(m - i)];
        r.require(p.coefficient(f) == c, "row reflection");
      }
    }
  }
  for (int m = 2; m <= 8; ++m) {
    CountGF g = gf_count_detailed(m);
    const std::size_t N = 2 * g.verified_terms;
    auto predicted = series_of_ratfunc(g.gf, N);
    auto actual = count_series(m, N);
    for (std::size_t k = 0; k <= N; ++k) {
      r.require(predicted[k] == Rational(actual[k]), "recurrence fails at m=" + std::to_string(m));
    }
  }
  return r;
}

Outcome sampler_uniformity() {
  Outcome r;
  std::map<CellMatrix, int> freq;
  for (const auto& c : enumerate_cycles_bruteforce(4, 4)) freq[cycle_to_matrix(c)] = 0;
  // sample_cycles itself throws if any sample's probability is not 1/6.
  for (const auto& s : sample_cycles({4, 4, 2024, 6000})) {
    auto it = freq.find(s.matrix);
    r.require(it != freq.end(), "sample is not an oracle cycle");
    if (it != freq.end()) ++it->second;
    r.require(s.probability == Rational(1, 6), "telescoping probability");
  }
  std::ostringstream counts;
  for (const auto& [a, c] : freq) {
    counts << c << ' ';
    r.require(c >= 850 && c <= 1150, "frequency " + std::to_string(c));
  }
  auto samples = sample_cycles({4, 10, 31337, 10000});
  double sum = 0;
  for (const auto& s : samples) sum += s.matrix.row_ones(0);
  StatReport exact = moments(4, 10, {1});
  const double se = std::sqrt(exact.variance.get_d() / 10000);
  r.require(std::abs(sum / 10000 - exact.expectation.get_d()) < 5 * se, "row-1 mean at (4,10)");
  if (r.ok) r.note = "frequencies " + counts.str();
  return r;
}

bool same(const MomentData& x, const MomentData& y) {
  return x.count == y.count && x.d_a == y.d_a && x.d_b == y.d_b && x.d_aa == y.d_aa && x.d_ab == y.d_ab &&
         x.d_bb == y.d_bb;
}

Outcome statistics_paths() {
  Outcome r;
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 12; ++n) {
      IntMultiPoly p = weight_enumerator_int(m, n, WeightSpec::all(m - 1));
      for (int a = 1; a < m; ++a) {
        r.require(same(moment_data(m, n, {a}), moment_data_from_enumerator(p, {a})), "single row");
        for (int b = a + 1; b < m; ++b) {
          r.require(same(moment_data(m, n, {a}, {b}), moment_data_from_enumerator(p, {a}, {b})), "row pair");
        }
      }
    }
  }
  StatReport four = asymptotic_moments(4, {1});
  if (!four.expectation_slope) {
    r.require(false, "no expectation slope");
    return r;
  }
  const Rational alpha = (four.expectation_slope->lo + four.expectation_slope->hi) / 2;
  auto series = moment_series(4, 51, {1});
  auto E = [&](int n) -> Rational { return Rational(series[n].d_a) / Rational(series[n].count); };
  const Rational diff = E(51) - E(50);
  r.require(abs(diff - alpha) < Rational(1, 1000000), "slope vs finite difference");
  if (r.ok) r.note = "alpha = " + to_decimal(alpha, 12) + ", E(51) - E(50) = " + to_decimal(diff, 12);
  return r;
}

struct Criterion {
  int id;
  const char* name;
  bool slow;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool fast = true, slow = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--fast")) fast = true, slow = false;
    else if (!std::strcmp(argv[i], "--slow")) fast = false, slow = true;
    else if (!std::strcmp(argv[i], "--all")) fast = slow = true;
    else {
      std::cerr << "usage: acceptance [--fast | --slow | --all]\n";
      return 64;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "alphabet of width 5", false, alphabet},
      {2, "followers golden", false, followers_golden},
      {3, "starters and enders of width 4", false, starters_enders},
      {4, "SSdg(3) digraph", false, digraph3},
      {5, "gf_count(4), gf_count(5)", false, gf_golden},
      {6, "count_series(10,10)", false, series10},
      {7, "count_cycles(10,100)", false, count10x100},
      {8, "count_cycles(10,10000) leading digits", true, count10x10000},
      {9, "weighted GF and enumerator of height 4", false, weighted_golden},
      {10, "monomial coefficients", false, monomials},
      {11, "oracle equivalence", false, oracle_equivalence},
      {12, "property suites", false, properties},
      {13, "sampler uniformity", false, sampler_uniformity},
      {14, "statistics two-path equality and slope", false, statistics_paths},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (c.slow ? !slow : !fast) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << secs << " s)";
    if (!o.note.empty()) line << ": " << o.note;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
