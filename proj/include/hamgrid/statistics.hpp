#ifndef HAMGRID_STATISTICS_HPP
#define HAMGRID_STATISTICS_HPP

// Moments of row statistics over uniformly random Hamiltonian cycles.
//
// For a row set R the statistic X_R of a cycle is the number of ones its
// matrix has in the rows of R. For R = {1} this is the number of cycle
// edges on the top boundary.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamgrid/algebra.hpp"
#include "hamgrid/grid_count.hpp"
#include "hamgrid/jet.hpp"
#include "hamgrid/multipoly.hpp"

namespace hamgrid {

/// Value with an error estimate (not a rigorous bound).
struct Estimate {
  Rational value;
  Rational error;
};

/// Exact second-order data of one grid: A = count, B_a = F_a, C_aa = F_aa ...
/// as the z^n coefficient of the marked generating function and its partial
/// derivatives at w = 1.
struct MomentData {
  Integer count;
  Integer d_a, d_b, d_aa, d_ab, d_bb;
};

/// Jet sweep for rows_a (and rows_b, may be empty).
MomentData moment_data(int m, int n, const std::vector<int>& rows_a, const std::vector<int>& rows_b = {});
/// Entries k = 0..N of the same sweep (k < 2 are zero).
std::vector<MomentData> moment_series(int m, std::size_t N, const std::vector<int>& rows_a,
                                      const std::vector<int>& rows_b = {});
/// The same quantities read off an expanded weight enumerator of P_m x P_n
/// (all rows marked).
MomentData moment_data_from_enumerator(const IntMultiPoly& enumerator, const std::vector<int>& rows_a,
                                       const std::vector<int>& rows_b = {});

struct StatReport {
  int m = 0;
  /// Empty for asymptotic reports.
  std::optional<int> n;
  std::vector<int> rows;
  std::vector<int> rows2;

  // Finite n.
  Integer count;
  Rational expectation;
  Rational variance;
  std::optional<Rational> expectation2;
  std::optional<Rational> variance2;
  std::optional<Rational> covariance;

  /// Correlation enclosure (finite n) or estimate (asymptotic).
  std::optional<Interval> correlation;

  // Asymptotic.
  std::optional<Interval> pole;    // rho
  std::optional<Interval> growth;  // lambda = 1/rho
  int period = 1;
  std::optional<Interval> growth_per_period;  // lambda^period
  std::optional<Interval> expectation_slope;
  std::optional<Estimate> expectation_intercept;
  std::optional<Estimate> variance_slope;
  std::optional<Estimate> variance_intercept;
  std::optional<Estimate> covariance_slope;
  std::optional<Estimate> correlation_limit;
  /// Sample sizes used for extrapolation.
  std::vector<int> extrapolation_points;

  unsigned precision = 12;
  /// Non-fatal conditions such as "degenerate statistic".
  std::vector<std::string> flags;

  bool asymptotic() const { return !n.has_value(); }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// E and Var of X_rows at P_m x P_n. Throws DomainError("empty ensemble")
/// when the grid has no Hamiltonian cycle.
StatReport moments(int m, int n, const std::vector<int>& rows);

/// Pearson correlation of X_rows_a and X_rows_b (disjoint row sets).
StatReport correlation(int m, int n, const std::vector<int>& rows_a, const std::vector<int>& rows_b);

struct AsymptoticOptions {
  unsigned precision = 12;
  /// Richardson base point n0 (uses n0, 2 n0, 4 n0); rounded up to even.
  int base = 64;
  GridOptions grid;
};

/// Growth rate, expectation slope (exact formula at the dominant pole), and
/// variance slope (Richardson extrapolation).
StatReport asymptotic_moments(int m, const std::vector<int>& rows, const AsymptoticOptions& opts = {});
StatReport asymptotic_correlation(int m, const std::vector<int>& rows_a, const std::vector<int>& rows_b,
                                  const AsymptoticOptions& opts = {});

/// Interval around sqrt(x), x >= 0, of width about 10^-digits.
Interval sqrt_interval(const Rational& x, unsigned digits);

}  // namespace hamgrid

#endif  // HAMGRID_STATISTICS_HPP
