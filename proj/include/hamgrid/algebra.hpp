#ifndef HAMGRID_ALGEBRA_HPP
#define HAMGRID_ALGEBRA_HPP

// Exact arithmetic: integers and rationals (GMP), univariate polynomials,
// rational functions, linear recurrences and real root isolation.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamgrid {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are always stripped; the zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<long> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of z^k, zero beyond the degree.
  Rational operator[](std::size_t k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  /// p(z) -> p(c z)
  UniPoly scale_argument(const Rational& c) const;
  /// Drops every term of degree >= k.
  UniPoly truncate(std::size_t k) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError on a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic greatest common divisor (zero if both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Reduced rational function N/D. When D(0) != 0 the representation is
/// normalized to D(0) = 1; otherwise D is made monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly{1}) {}
  RatFunc(UniPoly numerator, UniPoly denominator);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);

  std::string to_string(const std::string& var = "z") const;

 private:
  UniPoly num_;
  UniPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// a_k = sum_{i=1..order} coefficients[i-1] * a_{k-i} for every k >= order.
/// The first max(order, initial.size()) terms are given explicitly.
struct LinRec {
  std::vector<Rational> coefficients;
  std::vector<Rational> initial;

  std::size_t order() const { return coefficients.size(); }
  /// The first count terms of the sequence.
  std::vector<Rational> terms(std::size_t count) const;
};

/// Maclaurin coefficients of f for z^0..z^N (N+1 values), by the recurrence
/// the denominator implies. Throws DomainError("pole at origin") if D(0) = 0.
std::vector<Rational> series_of_ratfunc(const RatFunc& f, std::size_t N);

/// Minimal linear recurrence (exact Berlekamp-Massey over Q) consistent with
/// all of seq, or nullopt when its order would exceed max_order.
/// Requires seq.size() >= 2 * max_order + 1.
std::optional<LinRec> fit_min_recurrence(std::span<const Rational> seq, std::size_t max_order);

/// Integer fast path of the above: the minimal order is found modulo a prime,
/// the recurrence is lifted by Chinese remaindering and checked exactly over
/// Z. Returns nullopt when no integer recurrence of order <= max_order
/// reproduces seq (including the case that the minimal one is not integral).
std::optional<LinRec> fit_min_recurrence_integer(std::span<const Integer> seq,
                                                 std::size_t max_order);

RatFunc ratfunc_from_recurrence(const LinRec& rec);

/// Closed interval of rationals.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Number of distinct real roots of p in the half-open interval (a, b].
std::size_t count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);

/// Interval of width < 10^-digits around the smallest positive real root of
/// q, found by Sturm counting plus bisection. An exactly hit rational root is
/// returned as a degenerate interval. Throws DomainError if q(0) = 0 or there
/// is no positive root.
Interval isolate_dominant_pole(const UniPoly& q, unsigned digits);

/// Decimal rendering of a rational with the given number of digits after the
/// point (truncated toward zero).
std::string to_decimal(const Rational& x, unsigned digits);

/// Leading significant digits and decimal exponent of a positive integer,
/// e.g. 12345 with 3 digits -> ("1.23", 4).
std::pair<std::string, long> scientific_digits(const Integer& x, unsigned digits);

}  // namespace hamgrid

#endif  // HAMGRID_ALGEBRA_HPP
