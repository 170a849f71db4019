#include "doctest.h"

#include "hamgrid/errors.hpp"
#include "hamgrid/grid_count.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/statistics.hpp"
#include "printed_p4x10.hpp"

using namespace hamgrid;

namespace {

bool same(const MomentData& x, const MomentData& y) {
  return x.count == y.count && x.d_a == y.d_a && x.d_b == y.d_b && x.d_aa == y.d_aa && x.d_ab == y.d_ab &&
         x.d_bb == y.d_bb;
}

struct Empirical {
  Rational mean, var;
};

template <class F>
Empirical empirical(const std::vector<CycleEdges>& cycles, F stat) {
  Rational s = 0, s2 = 0;
  for (const auto& c : cycles) {
    Rational x = stat(cycle_to_matrix(c));
    s += x;
    s2 += x * x;
  }
  const Rational k(static_cast<long>(cycles.size()));
  Rational mean = s / k;
  return {mean, s2 / k - mean * mean};
}

Rational mid(const Interval& iv) { return (iv.lo + iv.hi) / 2; }

}  // namespace

TEST_CASE("jets and expanded enumerators agree") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 12; ++n) {
      IntMultiPoly p = weight_enumerator_int(m, n, WeightSpec::all(m - 1));
      for (int a = 1; a < m; ++a) {
        CHECK(same(moment_data(m, n, {a}), moment_data_from_enumerator(p, {a})));
        for (int b = a + 1; b < m; ++b) {
          CHECK(same(moment_data(m, n, {a}, {b}), moment_data_from_enumerator(p, {a}, {b})));
        }
      }
      if (m >= 4) CHECK(same(moment_data(m, n, {1, 3}, {2}), moment_data_from_enumerator(p, {1, 3}, {2})));
    }
  }
}

TEST_CASE("moments of P_4 x P_10 from the printed polynomial") {
  Rational count = 0, s2 = 0, s22 = 0, s1 = 0, s3 = 0, s13 = 0, s11 = 0, s33 = 0;
  for (const auto& t : printed::kP4x10) {
    count += t.coefficient;
    s2 += t.coefficient * t.a2;
    s22 += t.coefficient * t.a2 * t.a2;
    s1 += t.coefficient * t.a1;
    s3 += t.coefficient * t.a3;
    s11 += t.coefficient * t.a1 * t.a1;
    s33 += t.coefficient * t.a3 * t.a3;
    s13 += t.coefficient * t.a1 * t.a3;
  }
  REQUIRE(count == 1517);
  StatReport r = moments(4, 10, {2});
  CHECK(r.count == 1517);
  CHECK(r.expectation == s2 / count);
  CHECK(r.variance == s22 / count - (s2 / count) * (s2 / count));
  StatReport c = correlation(4, 10, {1}, {3});
  const Rational cov = s13 / count - (s1 / count) * (s3 / count);
  CHECK(*c.covariance == cov);
  CHECK(c.variance == s11 / count - (s1 / count) * (s1 / count));
  CHECK(*c.variance2 == s33 / count - (s3 / count) * (s3 / count));
  REQUIRE(c.correlation);
  // corr^2 = cov^2 / (va vb), compare squares to stay exact.
  const Rational target = cov * cov / (c.variance * *c.variance2);
  CHECK(c.correlation->lo * c.correlation->lo >= target * (1 - Rational(1, 1000000)));
  CHECK(c.correlation->hi <= 0);
}

TEST_CASE("P_2 x P_n: the top row is always full") {
  for (int n = 2; n <= 20; ++n) {
    StatReport r = moments(2, n, {1});
    CHECK(r.expectation == n - 1);
    CHECK(r.variance == 0);
  }
}

TEST_CASE("P_4 x P_4 against the six oracle cycles") {
  auto cycles = enumerate_cycles_bruteforce(4, 4);
  REQUIRE(cycles.size() == 6);
  for (int row = 1; row <= 3; ++row) {
    Empirical e = empirical(cycles, [&](const CellMatrix& a) { return Rational(a.row_ones(row - 1)); });
    StatReport r = moments(4, 4, {row});
    CHECK(r.expectation == e.mean);
    CHECK(r.variance == e.var);
  }
  Empirical top = empirical(cycles, [](const CellMatrix& a) { return Rational(a.row_ones(0)); });
  Empirical bottom = empirical(cycles, [](const CellMatrix& a) { return Rational(a.row_ones(2)); });
  Rational cross = 0;
  for (const auto& c : cycles) {
    CellMatrix a = cycle_to_matrix(c);
    cross += Rational(a.row_ones(0) * a.row_ones(2));
  }
  const Rational cov = cross / 6 - top.mean * bottom.mean;
  StatReport r = correlation(4, 4, {1}, {3});
  CHECK(*r.covariance == cov);
  REQUIRE(r.correlation);
  const Rational exact = cov / top.var;  // equal variances by symmetry
  CHECK(r.correlation->lo <= exact);
  CHECK(exact <= r.correlation->hi);
}

TEST_CASE("row reflection of moments") {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 2; n <= 14; ++n) {
      if (count_cycles(m, n) == 0) continue;
      StatReport top = moments(m, n, {1}), bottom = moments(m, n, {m - 1});
      CHECK(top.expectation == bottom.expectation);
      CHECK(top.variance == bottom.variance);
      CHECK(top.variance >= 0);
    }
  }
}

TEST_CASE("errors and degenerate cases") {
  CHECK_THROWS_AS(moments(5, 5, {1}), DomainError);
  CHECK_THROWS_AS(moments(4, 6, {4}), DomainError);
  CHECK_THROWS_AS(correlation(4, 6, {1}, {1}), DomainError);
  StatReport r = correlation(4, 2, {1}, {3});
  CHECK_FALSE(r.correlation);
  CHECK(std::find(r.flags.begin(), r.flags.end(), "degenerate statistic") != r.flags.end());
}

TEST_CASE("square root enclosures") {
  Interval s = sqrt_interval(2, 20);
  CHECK(s.lo * s.lo <= 2);
  CHECK(s.hi * s.hi >= 2);
  CHECK(s.width() <= Rational(1, Integer("100000000000000000000")));
  Interval e = sqrt_interval(Rational(9, 4), 5);
  CHECK(e.lo == Rational(3, 2));
  CHECK(e.hi == Rational(3, 2));
}

TEST_CASE("asymptotics of the top row") {
  StatReport two = asymptotic_moments(2, {1});
  REQUIRE(two.expectation_slope);
  CHECK(two.expectation_slope->lo <= 1);
  CHECK(two.expectation_slope->hi >= 1);
  CHECK(two.expectation_slope->width() < Rational(1, 1000000000));

  StatReport four = asymptotic_moments(4, {1});
  REQUIRE(four.expectation_slope);
  CHECK(four.flags.empty());
  const Rational alpha = mid(*four.expectation_slope);
  auto series = moment_series(4, 130, {1});
  auto E = [&](int n) -> Rational { return Rational(series[n].d_a) / Rational(series[n].count); };
  CHECK(abs(E(51) - E(50) - alpha) < Rational(1, 1000000));
  // Finite-difference slopes approach the limit.
  Rational prev = -1;
  for (int n : {16, 32, 64}) {
    Rational gap = abs((E(2 * n) - E(n)) / n - alpha);
    if (prev >= 0) CHECK(gap <= prev);
    prev = gap;
  }
  REQUIRE(four.variance_slope);
  CHECK(four.variance_slope->value > 0);
  CHECK(four.variance_slope->error < Rational(1, 1000000));
}

TEST_CASE("growth of P_5 x P_n has period two") {
  StatReport r = asymptotic_moments(5, {1});
  CHECK(r.period == 2);
  REQUIRE(r.growth_per_period);
  // lambda^2 = 1/u for the smallest positive root u of 1 - 11 u - 2 u^3.
  Interval u = isolate_dominant_pole(UniPoly{1, -11, 0, -2}, 30);
  CHECK(r.growth_per_period->lo <= 1 / u.lo);
  CHECK(1 / u.hi <= r.growth_per_period->hi);
  // Higher precision refines.
  AsymptoticOptions fine;
  fine.precision = 25;
  StatReport s = asymptotic_moments(5, {1}, fine);
  CHECK(r.growth->lo <= s.growth->lo);
  CHECK(s.growth->hi <= r.growth->hi);
}

TEST_CASE("asymptotic correlation of top and bottom rows") {
  StatReport r = asymptotic_correlation(4, {1}, {3});
  REQUIRE(r.correlation_limit);
  CHECK(r.correlation_limit->value < 0);
  CHECK(r.correlation_limit->value > -1);
  // Finite-n correlations drift toward the limit.
  StatReport at = correlation(4, 200, {1}, {3});
  REQUIRE(at.correlation);
  CHECK(abs(mid(*at.correlation) - r.correlation_limit->value) < Rational(1, 50));
}

TEST_CASE("report rendering") {
  StatReport r = moments(4, 10, {2});
  const std::string text = r.to_text();
  CHECK(text.find("count: 1517") != std::string::npos);
  CHECK(text.find("approx") != std::string::npos);
  auto j = r.to_json();
  CHECK(j["format"] == "stat-report");
  CHECK(j["count"] == "1517");
  auto a = asymptotic_moments(4, {1}).to_json();
  CHECK(a["n"] == "asymptotic");
  CHECK(a.contains("expectation_slope"));
}
