#include "hamgrid/statistics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hamgrid/errors.hpp"
#include "hamgrid/serialize.hpp"

namespace hamgrid {

namespace {

void check_rows(int m, const std::vector<int>& rows_a, const std::vector<int>& rows_b) {
  const int M = m - 1;
  std::set<int> seen;
  for (const auto* list : {&rows_a, &rows_b}) {
    for (int r : *list) {
      if (r < 1 || r > M) {
        throw DomainError("row " + std::to_string(r) + " outside 1.." + std::to_string(M));
      }
      if (!seen.insert(r).second) throw DomainError("row " + std::to_string(r) + " listed twice");
    }
  }
  if (rows_a.empty()) throw DomainError("statistic needs at least one row");
}

unsigned ones_in(const Column& c, const std::vector<int>& rows) {
  unsigned k = 0;
  for (int r : rows) k += c.at(r);
  return k;
}

MomentData from_jet(const Jet& j) {
  MomentData d;
  d.count = j.c[Jet::k1];
  d.d_a = j.c[Jet::kA];
  d.d_b = j.c[Jet::kB];
  d.d_aa = 2 * j.c[Jet::kAA];
  d.d_ab = j.c[Jet::kAB];
  d.d_bb = 2 * j.c[Jet::kBB];
  return d;
}

Rational pow10(unsigned digits) {
  Integer s;
  mpz_ui_pow_ui(s.get_mpz_t(), 10, digits);
  return Rational(s);
}

// Rational intervals with endpoints rounded outward to multiples of 2^-bits,
// which keeps the sizes of the numbers bounded during Horner evaluation.
struct Ball {
  Rational lo, hi;
};

Rational round_to(const Rational& x, unsigned bits, bool up) {
  Integer scaled = x.get_num();
  scaled <<= bits;
  Integer q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  }
  Rational r(q);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

Ball widen(Ball b, unsigned bits) { return {round_to(b.lo, bits, false), round_to(b.hi, bits, true)}; }

Ball mul(const Ball& a, const Ball& b, unsigned bits) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return widen({*std::min_element(p, p + 4), *std::max_element(p, p + 4)}, bits);
}

Ball div(const Ball& a, const Ball& b, unsigned bits) {
  if (sgn(b.lo) <= 0 && sgn(b.hi) >= 0) throw InternalError("interval division by zero");
  return mul(a, {1 / b.hi, 1 / b.lo}, bits);
}

bool contains_zero(const Ball& b) { return sgn(b.lo) <= 0 && sgn(b.hi) >= 0; }

Ball evaluate(const UniPoly& p, const Ball& x, unsigned bits) {
  if (p.is_zero()) return {0, 0};
  const auto& c = p.coefficients();
  Ball acc{c.back(), c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = mul(acc, x, bits);
    acc.lo += c[k];
    acc.hi += c[k];
  }
  return acc;
}

bool is_even_function(const UniPoly& p) {
  const auto& c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) {
    if (sgn(c[k]) != 0) return false;
  }
  return true;
}

int sign_of(const UniPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

// Does p vanish somewhere in [lo, hi]? Only used where p has at most one
// simple root there.
bool has_root_in(const UniPoly& p, const Interval& iv) {
  if (p.degree() < 1) return false;
  const int a = sign_of(p, iv.lo), b = sign_of(p, iv.hi);
  return a == 0 || b == 0 || a != b;
}

struct Richardson {
  Estimate slope;
  Estimate intercept;
};

// f_n = s n + c + (exponentially small); points n, 2n, 4n.
Richardson extrapolate(const Rational& f1, const Rational& f2, const Rational& f4, int n) {
  const Rational coarse = (f2 - f1) / n;
  const Rational fine = (f4 - f2) / (2 * n);
  const Rational c_coarse = 2 * f1 - f2;
  const Rational c_fine = 2 * f2 - f4;
  return {{fine, abs(fine - coarse)}, {c_fine, abs(c_fine - c_coarse)}};
}

Interval divide_by_sqrt(const Rational& num, const Rational& radicand, unsigned digits) {
  Interval s = sqrt_interval(radicand, digits + 4);
  if (sgn(s.lo) <= 0) throw InternalError("square root enclosure touches zero");
  Interval out = sgn(num) >= 0 ? Interval{num / s.hi, num / s.lo} : Interval{num / s.lo, num / s.hi};
  out.lo = std::max(out.lo, Rational(-1));
  out.hi = std::min(out.hi, Rational(1));
  return out;
}

std::string rows_text(const std::vector<int>& rows) {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
  return s + "}";
}

}  // namespace

std::vector<MomentData> moment_series(int m, std::size_t N, const std::vector<int>& rows_a,
                                      const std::vector<int>& rows_b) {
  if (m < 2) throw DomainError("grid height m must be at least 2");
  if (m - 1 > kMaxAutomatonWidth) {
    throw ResourceError("grid height m=" + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxAutomatonWidth + 1));
  }
  check_rows(m, rows_a, rows_b);
  const SSAutomaton& a = automaton_for(m - 1);
  auto g = automaton_weighted_digraph<Jet>(
      a, [&](const Column& c) { return Jet::power(ones_in(c, rows_a), ones_in(c, rows_b)); }, Jet(1));
  std::vector<MomentData> out;
  out.reserve(N + 1);
  sweep_walks(g, N, [&](std::size_t, const Jet& j) { out.push_back(from_jet(j)); });
  return out;
}

MomentData moment_data(int m, int n, const std::vector<int>& rows_a, const std::vector<int>& rows_b) {
  if (n < 2) throw DomainError("grid dimensions must be at least 2");
  return moment_series(m, static_cast<std::size_t>(n), rows_a, rows_b).back();
}

MomentData moment_data_from_enumerator(const IntMultiPoly& enumerator, const std::vector<int>& rows_a,
                                       const std::vector<int>& rows_b) {
  MomentData d;
  for (const auto& [e, c] : enumerator.sorted_terms()) {
    Integer x = 0, y = 0;
    for (int r : rows_a) x += e[static_cast<std::size_t>(r)];
    for (int r : rows_b) y += e[static_cast<std::size_t>(r)];
    d.count += c;
    d.d_a += c * x;
    d.d_b += c * y;
    d.d_aa += c * x * (x - 1);
    d.d_ab += c * x * y;
    d.d_bb += c * y * (y - 1);
  }
  return d;
}

Interval sqrt_interval(const Rational& x, unsigned digits) {
  if (sgn(x) < 0) throw DomainError("square root of a negative number");
  const Rational scale = pow10(digits);
  const Rational big = x * scale * scale;
  Integer scaled = big.get_num() / big.get_den();
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rational lo = Rational(s) / scale, hi = Rational(s + 1) / scale;
  if (lo * lo == x) hi = lo;
  return {lo, hi};
}

StatReport moments(int m, int n, const std::vector<int>& rows) {
  const MomentData d = moment_data(m, n, rows);
  if (sgn(d.count) == 0) {
    throw DomainError("empty ensemble: P_" + std::to_string(m) + " x P_" + std::to_string(n) +
                      " has no Hamiltonian cycle");
  }
  StatReport r;
  r.m = m;
  r.n = n;
  r.rows = rows;
  r.count = d.count;
  r.expectation = (Rational(d.d_a) / Rational(d.count));
  r.variance = (Rational(d.d_aa) / Rational(d.count)) + r.expectation - r.expectation * r.expectation;
  if (sgn(r.variance) == 0) r.flags.push_back("zero variance");
  return r;
}

StatReport correlation(int m, int n, const std::vector<int>& rows_a, const std::vector<int>& rows_b) {
  if (rows_b.empty()) throw DomainError("correlation needs a second row set");
  const MomentData d = moment_data(m, n, rows_a, rows_b);
  if (sgn(d.count) == 0) {
    throw DomainError("empty ensemble: P_" + std::to_string(m) + " x P_" + std::to_string(n) +
                      " has no Hamiltonian cycle");
  }
  StatReport r;
  r.m = m;
  r.n = n;
  r.rows = rows_a;
  r.rows2 = rows_b;
  r.count = d.count;
  const Rational A(d.count);
  r.expectation = d.d_a / A;
  r.expectation2 = d.d_b / A;
  r.variance = d.d_aa / A + r.expectation - r.expectation * r.expectation;
  r.variance2 = d.d_bb / A + *r.expectation2 - *r.expectation2 * *r.expectation2;
  r.covariance = d.d_ab / A - r.expectation * *r.expectation2;
  if (sgn(r.variance) == 0 || sgn(*r.variance2) == 0) {
    r.flags.push_back("degenerate statistic");
  } else {
    r.correlation = divide_by_sqrt(*r.covariance, r.variance * *r.variance2, r.precision);
  }
  return r;
}

namespace {

struct PoleData {
  RatFunc gf;
  Interval rho;
  int period = 1;
};

PoleData dominant_pole(int m, unsigned digits, const GridOptions& grid) {
  PoleData p;
  p.gf = gf_count(m, grid);
  const UniPoly& q = p.gf.denominator();
  p.period = is_even_function(q) && is_even_function(p.gf.numerator()) ? 2 : 1;
  p.rho = isolate_dominant_pole(q, digits);
  return p;
}

Interval invert(const Interval& iv) { return {1 / iv.hi, 1 / iv.lo}; }

Interval power(const Interval& iv, int k) {
  Interval out{1, 1};
  for (int i = 0; i < k; ++i) out = {out.lo * iv.lo, out.hi * iv.hi};
  return out;
}

}  // namespace

StatReport asymptotic_moments(int m, const std::vector<int>& rows, const AsymptoticOptions& opts) {
  check_rows(m, rows, {});
  StatReport r;
  r.m = m;
  r.rows = rows;
  r.precision = opts.precision;
  const unsigned digits = opts.precision + 6;
  PoleData pd = dominant_pole(m, digits, opts.grid);
  r.period = pd.period;
  r.pole = pd.rho;
  r.growth = invert(pd.rho);
  r.growth_per_period = power(*r.growth, pd.period);

  const UniPoly& P = pd.gf.numerator();
  const UniPoly& q = pd.gf.denominator();
  const UniPoly dq = q.derivative();
  if (has_root_in(dq, pd.rho)) r.flags.push_back("dominant pole is not simple");

  int n0 = std::max(opts.base, 4);
  if (n0 % 2) ++n0;
  const std::size_t N = static_cast<std::size_t>(4 * n0);
  const std::size_t V = automaton_for(m - 1).vertex_count();
  std::vector<MomentData> series = moment_series(m, N, rows);

  // Expectation slope from the double pole of sum_n F_w(n) z^n.
  WalkGF fw = fit_series_gf(
      [&](std::size_t count) {
        std::vector<Integer> out;
        for (std::size_t k = 0; k < count; ++k) {
          if (k >= series.size()) {
            series = moment_series(m, 2 * count, rows);
          }
          out.push_back(series[k].d_a);
        }
        return out;
      },
      2 * V);
  const UniPoly& R = fw.gf.numerator();
  const UniPoly& S = fw.gf.denominator();
  const UniPoly S1 = S.derivative(), S2 = S1.derivative();
  const UniPoly double_part = UniPoly::gcd(UniPoly::gcd(S, S1), q);
  const bool formula_ok = has_root_in(double_part, pd.rho) && !has_root_in(UniPoly::gcd(S2, q), pd.rho);
  if (formula_ok) {
    const Rational target = 1 / pow10(opts.precision);
    Interval rho = pd.rho;
    for (unsigned extra = digits;; extra *= 2) {
      const unsigned bits = 4 * extra + 64;
      const Ball x = widen({rho.lo, rho.hi}, bits);
      const Ball num = mul(evaluate(R, x, bits), evaluate(dq, x, bits), bits);
      const Ball den = mul(mul(x, evaluate(S2, x, bits), bits), evaluate(P, x, bits), bits);
      if (!contains_zero(den)) {
        Ball a = div(num, den, bits);
        Interval alpha{-2 * a.hi, -2 * a.lo};
        if (alpha.width() < target || extra > 8 * digits) {
          r.expectation_slope = alpha;
          break;
        }
      }
      rho = isolate_dominant_pole(q, 2 * extra);
    }
  } else {
    r.flags.push_back("expectation slope formula not applicable; slope extrapolated");
  }

  auto at = [&](int n) -> const MomentData& { return series[static_cast<std::size_t>(n)]; };
  auto E = [&](int n) -> Rational { return (Rational(at(n).d_a) / Rational(at(n).count)); };
  auto Var = [&](int n) -> Rational {
    const Rational e = E(n);
    return (Rational(at(n).d_aa) / Rational(at(n).count)) + e - e * e;
  };
  for (int k : {n0, 2 * n0, 4 * n0}) {
    if (sgn(at(k).count) == 0) throw DomainError("empty ensemble at n=" + std::to_string(k));
    r.extrapolation_points.push_back(k);
  }
  const Richardson ex = extrapolate(E(n0), E(2 * n0), E(4 * n0), n0);
  if (!r.expectation_slope) {
    r.expectation_slope = Interval{ex.slope.value - ex.slope.error, ex.slope.value + ex.slope.error};
  }
  const Rational alpha_mid = (r.expectation_slope->lo + r.expectation_slope->hi) / 2;
  const Rational b_fine = E(4 * n0) - alpha_mid * (4 * n0), b_coarse = E(2 * n0) - alpha_mid * (2 * n0);
  r.expectation_intercept = Estimate{b_fine, abs(b_fine - b_coarse)};
  const Richardson vx = extrapolate(Var(n0), Var(2 * n0), Var(4 * n0), n0);
  r.variance_slope = vx.slope;
  r.variance_intercept = vx.intercept;
  if (sgn(vx.slope.value) == 0) r.flags.push_back("zero variance");
  return r;
}

StatReport asymptotic_correlation(int m, const std::vector<int>& rows_a, const std::vector<int>& rows_b,
                                  const AsymptoticOptions& opts) {
  if (rows_b.empty()) throw DomainError("correlation needs a second row set");
  check_rows(m, rows_a, rows_b);
  StatReport r;
  r.m = m;
  r.rows = rows_a;
  r.rows2 = rows_b;
  r.precision = opts.precision;
  PoleData pd = dominant_pole(m, opts.precision + 6, opts.grid);
  r.period = pd.period;
  r.pole = pd.rho;
  r.growth = invert(pd.rho);
  r.growth_per_period = power(*r.growth, pd.period);

  int n0 = std::max(opts.base, 4);
  if (n0 % 2) ++n0;
  const auto series = moment_series(m, static_cast<std::size_t>(4 * n0), rows_a, rows_b);
  struct Second {
    Rational va, vb, cov;
  };
  auto second = [&](int n) {
    const MomentData& d = series[static_cast<std::size_t>(n)];
    if (sgn(d.count) == 0) throw DomainError("empty ensemble at n=" + std::to_string(n));
    const Rational A(d.count), ea = d.d_a / A, eb = d.d_b / A;
    return Second{d.d_aa / A + ea - ea * ea, d.d_bb / A + eb - eb * eb, d.d_ab / A - ea * eb};
  };
  const Second s1 = second(n0), s2 = second(2 * n0), s4 = second(4 * n0);
  r.extrapolation_points = {n0, 2 * n0, 4 * n0};
  const Richardson va = extrapolate(s1.va, s2.va, s4.va, n0);
  const Richardson vb = extrapolate(s1.vb, s2.vb, s4.vb, n0);
  const Richardson cv = extrapolate(s1.cov, s2.cov, s4.cov, n0);
  r.variance_slope = va.slope;
  r.covariance_slope = cv.slope;
  if (sgn(va.slope.value) <= 0 || sgn(vb.slope.value) <= 0) {
    r.flags.push_back("degenerate statistic");
    return r;
  }
  // Limit of the correlation: ratio of the slopes. Error from the coarser
  // Richardson level.
  const unsigned digits = opts.precision;
  auto mid = [](const Interval& iv) -> Rational { return (iv.lo + iv.hi) / 2; };
  const Rational fine = mid(divide_by_sqrt(cv.slope.value, va.slope.value * vb.slope.value, digits));
  const Rational cva = (s2.cov - s1.cov) / n0, vaa = (s2.va - s1.va) / n0, vba = (s2.vb - s1.vb) / n0;
  Rational coarse = fine;
  if (sgn(vaa) > 0 && sgn(vba) > 0) coarse = mid(divide_by_sqrt(cva, vaa * vba, digits));
  r.correlation_limit = Estimate{fine, abs(fine - coarse) + 1 / pow10(digits)};
  return r;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string approx(const Rational& x, unsigned digits) { return to_decimal(x, digits); }

std::string exact_and_approx(const Rational& x, unsigned digits) {
  return x.get_str() + "  (approx " + approx(x, digits) + ")";
}

std::string interval_text(const Interval& iv, unsigned digits) {
  return "[" + approx(iv.lo, digits) + ", " + approx(iv.hi, digits + 0) + "]";
}

std::string estimate_text(const Estimate& e, unsigned digits) {
  return approx(e.value, digits) + " +- " + approx(e.error, digits) + " (estimate)";
}

nlohmann::json interval_json(const Interval& iv) { return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}}; }

nlohmann::json estimate_json(const Estimate& e, unsigned digits) {
  return {{"value", to_json(e.value)}, {"error", to_json(e.error)}, {"approx", approx(e.value, digits)}};
}

}  // namespace

std::string StatReport::to_text() const {
  std::ostringstream os;
  const unsigned d = precision;
  os << "grid: P_" << m << " x P_" << (n ? std::to_string(*n) : std::string("n, n -> infinity")) << "\n";
  os << "statistic: ones in rows " << rows_text(rows);
  if (!rows2.empty()) os << " vs rows " << rows_text(rows2);
  os << "\n";
  if (!asymptotic()) {
    os << "count: " << count.get_str() << "\n";
    os << "expectation: " << exact_and_approx(expectation, d) << "\n";
    os << "variance: " << exact_and_approx(variance, d) << "\n";
    if (expectation2) os << "expectation (second): " << exact_and_approx(*expectation2, d) << "\n";
    if (variance2) os << "variance (second): " << exact_and_approx(*variance2, d) << "\n";
    if (covariance) os << "covariance: " << exact_and_approx(*covariance, d) << "\n";
    if (correlation) os << "correlation: " << interval_text(*correlation, d) << "\n";
  } else {
    if (pole) os << "dominant pole rho: " << interval_text(*pole, d) << "\n";
    if (growth) os << "growth rate lambda: " << interval_text(*growth, d) << "\n";
    if (period != 1) {
      os << "period: " << period << " (counts vanish for odd n)\n";
      os << "growth per period lambda^" << period << ": " << interval_text(*growth_per_period, d) << "\n";
    }
    if (expectation_slope) os << "expectation slope: " << interval_text(*expectation_slope, d) << "\n";
    if (expectation_intercept) os << "expectation intercept: " << estimate_text(*expectation_intercept, d) << "\n";
    if (variance_slope) os << "variance slope: " << estimate_text(*variance_slope, d) << "\n";
    if (variance_intercept) os << "variance intercept: " << estimate_text(*variance_intercept, d) << "\n";
    if (covariance_slope) os << "covariance slope: " << estimate_text(*covariance_slope, d) << "\n";
    if (correlation_limit) os << "correlation limit: " << estimate_text(*correlation_limit, d) << "\n";
    if (!extrapolation_points.empty()) {
      os << "extrapolated from n =";
      for (int k : extrapolation_points) os << " " << k;
      os << "\n";
    }
  }
  for (const auto& f : flags) os << "flag: " << f << "\n";
  return os.str();
}

nlohmann::json StatReport::to_json() const {
  nlohmann::json j{{"format", "stat-report"}, {"version", kFormatVersion}, {"m", m}};
  j["n"] = n ? nlohmann::json(*n) : nlohmann::json("asymptotic");
  j["rows"] = rows;
  if (!rows2.empty()) j["rows2"] = rows2;
  const unsigned d = precision;
  if (!asymptotic()) {
    j["count"] = count.get_str();
    j["expectation"] = hamgrid::to_json(expectation);
    j["expectation_approx"] = approx(expectation, d);
    j["variance"] = hamgrid::to_json(variance);
    j["variance_approx"] = approx(variance, d);
    if (expectation2) j["expectation2"] = hamgrid::to_json(*expectation2);
    if (variance2) j["variance2"] = hamgrid::to_json(*variance2);
    if (covariance) j["covariance"] = hamgrid::to_json(*covariance);
    if (correlation) j["correlation"] = interval_json(*correlation);
  } else {
    if (pole) j["pole"] = interval_json(*pole);
    if (growth) j["growth"] = interval_json(*growth);
    j["period"] = period;
    if (growth_per_period) j["growth_per_period"] = interval_json(*growth_per_period);
    if (expectation_slope) j["expectation_slope"] = interval_json(*expectation_slope);
    if (expectation_intercept) j["expectation_intercept"] = estimate_json(*expectation_intercept, d);
    if (variance_slope) j["variance_slope"] = estimate_json(*variance_slope, d);
    if (variance_intercept) j["variance_intercept"] = estimate_json(*variance_intercept, d);
    if (covariance_slope) j["covariance_slope"] = estimate_json(*covariance_slope, d);
    if (correlation_limit) j["correlation_limit"] = estimate_json(*correlation_limit, d);
    j["extrapolation_points"] = extrapolation_points;
  }
  j["flags"] = flags;
  return j;
}

}  // namespace hamgrid
