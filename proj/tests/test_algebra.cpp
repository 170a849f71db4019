#include "doctest.h"

#include <random>

#include "hamgrid/algebra.hpp"
#include "hamgrid/errors.hpp"

using namespace hamgrid;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree, bool unit_constant) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(Rational(d(rng)));
  if (unit_constant) c[0] = 1;
  if (sgn(c.back()) == 0) c.back() = 1;
  return UniPoly(c);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    Rational x(a, b), y(b, a);
    x.canonicalize();
    y.canonicalize();
    CHECK(x * y == 1);
    CHECK(x + (-x) == 0);
  }
}

TEST_CASE("polynomial division identity") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    UniPoly a = random_poly(rng, 7, false), b = random_poly(rng, 3, false);
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(UniPoly::divmod(UniPoly{1, 1}, UniPoly()), DomainError);
}

TEST_CASE("gcd") {
  UniPoly f = UniPoly{-1, 1} * UniPoly{-2, 1};
  UniPoly g = UniPoly{-1, 1} * UniPoly{3, 1};
  CHECK(UniPoly::gcd(f, g) == UniPoly{-1, 1});
  CHECK(UniPoly::gcd(UniPoly{1, 1}, UniPoly{2, 1}) == UniPoly{1});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    UniPoly c = random_poly(rng, 3, false), a = random_poly(rng, 4, false), b = random_poly(rng, 4, false);
    UniPoly h = UniPoly::gcd(a * c, b * c);
    CHECK(UniPoly::divmod(h, UniPoly::gcd(c, c)).second.is_zero());
    CHECK(UniPoly::divmod(a * c, h).second.is_zero());
    CHECK(UniPoly::divmod(b * c, h).second.is_zero());
  }
}

TEST_CASE("rational functions are reduced and normalized") {
  RatFunc f(UniPoly{0, 0, 2} * UniPoly{1, 1}, UniPoly{2, -4, -4, 4, -2} * UniPoly{1, 1});
  CHECK(f.numerator() == UniPoly{0, 0, 1});
  CHECK(f.denominator() == UniPoly{1, -2, -2, 2, -1});
  CHECK_THROWS_AS(RatFunc(UniPoly{1}, UniPoly()), DomainError);
  CHECK_THROWS_AS(series_of_ratfunc(RatFunc(UniPoly{1}, UniPoly{0, 1}), 4), DomainError);
}

TEST_CASE("series and recurrence round trip") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const int dq = 1 + static_cast<int>(rng() % 6), dp = static_cast<int>(rng() % 6);
    RatFunc f(random_poly(rng, dp, false), random_poly(rng, dq, true));
    const std::size_t bound = 8;
    auto s = series_of_ratfunc(f, 2 * bound + 20);
    auto rec = fit_min_recurrence(s, bound);
    REQUIRE(rec);
    CHECK(ratfunc_from_recurrence(*rec) == f);
    CHECK(rec->terms(s.size()) == s);
  }
}

TEST_CASE("integer recurrence fit") {
  std::vector<Integer> fib{0, 1};
  for (int k = 2; k < 200; ++k) fib.push_back(fib[k - 1] + fib[k - 2]);
  auto rec = fit_min_recurrence_integer(fib, 10);
  REQUIRE(rec);
  CHECK(rec->order() == 2);
  CHECK(ratfunc_from_recurrence(*rec) == RatFunc(UniPoly{0, 1}, UniPoly{1, -1, -1}));
  // Not a low-order recurrence: factorials.
  std::vector<Integer> fact{1};
  for (int k = 1; k < 41; ++k) fact.push_back(fact.back() * k);
  CHECK_FALSE(fit_min_recurrence_integer(fact, 20));
  std::vector<Rational> short_seq(5, Rational(1));
  CHECK_THROWS_AS(fit_min_recurrence(short_seq, 10), DomainError);
}

TEST_CASE("dominant pole isolation") {
  // 1 - z - z^2 has its positive root at (sqrt 5 - 1)/2.
  UniPoly q{1, -1, -1};
  Interval iv = isolate_dominant_pole(q, 30);
  CHECK(iv.width() < Rational(1, Integer("1000000000000000000000000000000")));
  // (2x + 1)^2 < 5 on the left end, > 5 on the right
  CHECK((2 * iv.lo + 1) * (2 * iv.lo + 1) <= 5);
  CHECK((2 * iv.hi + 1) * (2 * iv.hi + 1) >= 5);
  // Refinements nest.
  Interval coarse = isolate_dominant_pole(q, 5);
  CHECK(coarse.lo <= iv.lo);
  CHECK(iv.hi <= coarse.hi);
  // Exact rational roots come back as points.
  Interval half = isolate_dominant_pole(UniPoly{1, -2}, 10);
  CHECK(half.lo == Rational(1, 2));
  CHECK(half.hi == Rational(1, 2));
  CHECK_THROWS_AS(isolate_dominant_pole(UniPoly{1, 1}, 5), DomainError);
  CHECK_THROWS_AS(isolate_dominant_pole(UniPoly{0, 1}, 5), DomainError);
}

TEST_CASE("real root counting") {
  UniPoly p = UniPoly{-1, 1} * UniPoly{-2, 1} * UniPoly{-3, 1};
  CHECK(count_real_roots(p, 0, 10) == 3);
  CHECK(count_real_roots(p, Rational(3, 2), 10) == 2);
  CHECK(count_real_roots(p, 1, 2) == 1);
  CHECK(count_real_roots(UniPoly{1, 0, 1}, -10, 10) == 0);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-7, 2), 2) == "-3.50");
  CHECK(to_decimal(Rational(5), 0) == "5");
  auto [d, e] = scientific_digits(Integer(12345), 3);
  CHECK(d == "1.23");
  CHECK(e == 4);
}
