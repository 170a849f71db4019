#include "hamgrid/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "hamgrid/errors.hpp"

namespace hamgrid {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational power = 1;
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::truncate(std::size_t k) const {
  if (k >= coeffs_.size()) return *this;
  return UniPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k)));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.coeffs_.back();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

// Primitive integer multiple of p (positive leading coefficient).
std::vector<Integer> primitive_integer(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coefficients().size());
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    v.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (sgn(v.back()) < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

void make_primitive(std::vector<Integer>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(v.back()) < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, both over Z.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Degree of gcd(x mod p, y mod p), or -1 if a leading coefficient vanishes
// mod p (the image is then unusable).
int modular_gcd_degree(const std::vector<Integer>& x, const std::vector<Integer>& y, std::uint64_t p) {
  auto reduce = [p](const std::vector<Integer>& v) {
    std::vector<std::uint64_t> out(v.size());
    Integer r;
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpz_fdiv_r_ui(r.get_mpz_t(), v[i].get_mpz_t(), static_cast<unsigned long>(p));
      out[i] = r.get_ui();
    }
    return out;
  };
  auto a = reduce(x), b = reduce(y);
  if (a.back() == 0 || b.back() == 0) return -1;
  auto strip = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (!a.empty() && a.size() >= b.size()) {
      const std::uint64_t q = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::uint64_t t = mulmod(q, b[j], p);
        a[shift + j] = a[shift + j] >= t ? a[shift + j] - t : a[shift + j] + p - t;
      }
      strip(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) return a * (Rational(1) / a.leading());
  // Primitive remainder sequence over Z keeps coefficient growth in check.
  std::vector<Integer> x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  // A constant gcd modulo a prime not dividing either leading coefficient
  // proves coprimality.
  if (modular_gcd_degree(x, y, 4611686018427387847ULL) == 0) return UniPoly{1};
  while (!y.empty()) {
    std::vector<Integer> r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c(x.begin(), x.end());
  UniPoly g(std::move(c));
  return g * (Rational(1) / g.leading());
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(UniPoly numerator, UniPoly denominator) {
  if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
  UniPoly g = UniPoly::gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = UniPoly::divmod(numerator, g).first;
    denominator = UniPoly::divmod(denominator, g).first;
  }
  Rational scale = sgn(denominator[0]) != 0 ? Rational(1) / denominator[0]
                                            : Rational(1) / denominator.leading();
  num_ = numerator * scale;
  den_ = denominator * scale;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatFunc::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- series

std::vector<Rational> series_of_ratfunc(const RatFunc& f, std::size_t N) {
  const UniPoly& q = f.denominator();
  const UniPoly& p = f.numerator();
  if (sgn(q[0]) == 0) throw DomainError("pole at origin");
  const Rational inv_q0 = Rational(1) / q[0];
  const auto& qc = q.coefficients();
  std::vector<Rational> c(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    Rational acc = p[k];
    const std::size_t lim = std::min(k, qc.size() - 1);
    for (std::size_t i = 1; i <= lim; ++i) acc -= qc[i] * c[k - i];
    c[k] = acc * inv_q0;
  }
  return c;
}

// ---------------------------------------------------------------- LinRec

std::vector<Rational> LinRec::terms(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  const std::size_t d = order();
  for (std::size_t k = 0; k < count; ++k) {
    if (k < initial.size()) {
      out.push_back(initial[k]);
      continue;
    }
    Rational acc = 0;
    for (std::size_t i = 1; i <= d; ++i) acc += coefficients[i - 1] * out[k - i];
    out.push_back(acc);
  }
  return out;
}

namespace {

// Berlekamp-Massey over a field. Returns the connection polynomial
// C = 1 + c_1 z + ... and the linear complexity L.
template <class F>
std::pair<std::vector<F>, std::size_t> berlekamp_massey(std::span<const F> s,
                                                        auto&& is_zero, auto&& inverse) {
  std::vector<F> C{F(1)}, B{F(1)};
  std::size_t L = 0;
  std::size_t shift = 1;
  F b = F(1);
  for (std::size_t n = 0; n < s.size(); ++n) {
    F d = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += C[i] * s[n - i];
    if (is_zero(d)) {
      ++shift;
      continue;
    }
    F coef = d * inverse(b);
    std::vector<F> T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, F(0));
    for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= coef * B[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  C.resize(L + 1, F(0));
  return {std::move(C), L};
}

// Minimal arithmetic modulo a 62-bit prime.
struct ModP {
  std::uint64_t v = 0;
  static inline std::uint64_t p = 0;

  ModP() = default;
  explicit ModP(std::uint64_t x) : v(x % p) {}
  explicit ModP(int x) : v(x >= 0 ? static_cast<std::uint64_t>(x) % p
                                    : p - (static_cast<std::uint64_t>(-x) % p)) {}

  ModP& operator+=(const ModP& o) {
    v += o.v;
    if (v >= p) v -= p;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    v = v >= o.v ? v - o.v : v + p - o.v;
    return *this;
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    ModP r;
    r.v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % p);
    return r;
  }
  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  ModP inverse() const { return pow(p - 2); }
};

// Primes just below 2^62.
constexpr std::uint64_t kPrimes[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387701ULL,
    4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387569ULL,
    4611686018427387541ULL,
};

bool satisfies(std::span<const Integer> seq, const std::vector<Integer>& rec, std::size_t from) {
  const std::size_t d = rec.size();
  Integer acc;
  for (std::size_t k = from; k < seq.size(); ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= d; ++i) {
      if (sgn(rec[i - 1]) != 0) acc += rec[i - 1] * seq[k - i];
    }
    if (acc != seq[k]) return false;
  }
  return true;
}

}  // namespace

std::optional<LinRec> fit_min_recurrence(std::span<const Rational> seq, std::size_t max_order) {
  if (seq.size() < 2 * max_order + 1) {
    throw DomainError("fit_min_recurrence needs at least " + std::to_string(2 * max_order + 1) +
                      " terms for max_order " + std::to_string(max_order) + ", got " +
                      std::to_string(seq.size()));
  }
  auto [C, L] = berlekamp_massey<Rational>(
      seq, [](const Rational& x) { return sgn(x) == 0; },
      [](const Rational& x) -> Rational { return Rational(1) / x; });
  if (L > max_order) return std::nullopt;
  LinRec rec;
  rec.coefficients.resize(L);
  for (std::size_t i = 1; i <= L; ++i) rec.coefficients[i - 1] = -C[i];
  rec.initial.assign(seq.begin(), seq.begin() + static_cast<long>(L));
  return rec;
}

std::optional<LinRec> fit_min_recurrence_integer(std::span<const Integer> seq,
                                                 std::size_t max_order) {
  if (seq.size() < 2 * max_order + 1) {
    throw DomainError("fit_min_recurrence needs at least " + std::to_string(2 * max_order + 1) +
                      " terms for max_order " + std::to_string(max_order) + ", got " +
                      std::to_string(seq.size()));
  }
  // Chinese remaindering across primes until the symmetric lift is stable
  // and reproduces the sequence exactly.
  std::vector<Integer> residues, previous;
  Integer modulus = 1;
  std::size_t order = 0;
  bool have_order = false;
  for (std::uint64_t prime : kPrimes) {
    ModP::p = prime;
    std::vector<ModP> s;
    s.reserve(seq.size());
    Integer r;
    for (const auto& x : seq) {
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(prime));
      s.emplace_back(static_cast<std::uint64_t>(r.get_ui()));
    }
    auto [C, L] = berlekamp_massey<ModP>(
        std::span<const ModP>(s), [](const ModP& x) { return x.v == 0; },
        [](const ModP& x) { return x.inverse(); });
    if (!have_order) {
      if (L > max_order) return std::nullopt;
      order = L;
      residues.assign(order, Integer(0));
      have_order = true;
    } else if (L != order) {
      // Unlucky prime: the complexity modulo p dropped or rose. Skip it.
      continue;
    }
    Integer p_int;
    mpz_set_ui(p_int.get_mpz_t(), static_cast<unsigned long>(prime));
    for (std::size_t i = 0; i < order; ++i) {
      // r_i = -C[i+1] mod p
      std::uint64_t ri = (prime - C[i + 1].v) % prime;
      Integer target;
      mpz_set_ui(target.get_mpz_t(), static_cast<unsigned long>(ri));
      // x = residues[i] + modulus * t, with x = target (mod p)
      Integer diff = target - residues[i];
      Integer inv;
      Integer mod_p = modulus % p_int;
      mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p_int.get_mpz_t());
      Integer t = (diff % p_int) * inv % p_int;
      if (sgn(t) < 0) t += p_int;
      residues[i] += modulus * t;
    }
    modulus *= p_int;
    std::vector<Integer> lifted(order);
    const Integer half = modulus / 2;
    for (std::size_t i = 0; i < order; ++i) {
      lifted[i] = residues[i] > half ? residues[i] - modulus : residues[i];
    }
    const bool last = prime == kPrimes[std::size(kPrimes) - 1];
    const bool stable = lifted == previous;
    previous = lifted;
    if ((stable || last) && satisfies(seq, lifted, order)) {
      LinRec rec;
      rec.coefficients.assign(lifted.begin(), lifted.end());
      rec.initial.assign(seq.begin(), seq.begin() + static_cast<long>(order));
      return rec;
    }
  }
  return std::nullopt;
}

RatFunc ratfunc_from_recurrence(const LinRec& rec) {
  const std::size_t d = rec.order();
  std::vector<Rational> q(d + 1);
  q[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) q[i] = -rec.coefficients[i - 1];
  UniPoly den(std::move(q));
  const std::size_t t = std::max(d, rec.initial.size());
  UniPoly head(rec.terms(t));
  UniPoly num = (head * den).truncate(t);
  return RatFunc(std::move(num), std::move(den));
}

// ---------------------------------------------------------------- roots

namespace {

int sign_at(const UniPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

// Positive rescaling to a primitive integer polynomial keeps every sign.
UniPoly primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return p * Rational(l, g);
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly g = UniPoly::gcd(p, p.derivative());
  if (g.degree() <= 0) return primitive(p);
  return primitive(UniPoly::divmod(p, g).first);
}

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
  std::vector<UniPoly> chain{squarefree, primitive(squarefree.derivative())};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(primitive(-r));
  }
  return chain;
}

std::size_t variations(const std::vector<UniPoly>& chain, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (p.degree() == 0 || !(a < b)) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  std::size_t va = variations(chain, a), vb = variations(chain, b);
  return va > vb ? va - vb : 0;
}

Interval isolate_dominant_pole(const UniPoly& q, unsigned digits) {
  if (q.is_zero() || sgn(q[0]) == 0) throw DomainError("pole isolation needs q(0) != 0");
  if (q.degree() < 1) throw DomainError("no positive real root");
  const UniPoly sf = squarefree_part(q);
  const auto chain = sturm_chain(sf);
  auto roots_in = [&](const Rational& a, const Rational& b) {
    std::size_t va = variations(chain, a), vb = variations(chain, b);
    return va > vb ? va - vb : 0;
  };
  // Cauchy bound, rounded up to a power of two so dyadic midpoints are used.
  Rational bound = 0;
  for (const auto& c : sf.coefficients()) bound = std::max(bound, Rational(abs(c / sf.leading())));
  bound += 1;
  Rational hi = 1;
  while (hi < bound) hi *= 2;
  Rational lo = 0;
  if (roots_in(lo, hi) == 0) throw DomainError("no positive real root");
  // Shrink until exactly one root is left in (lo, hi].
  while (roots_in(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (roots_in(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational target(1, scale);
  if (sign_at(sf, hi) == 0) return {hi, hi};
  const int s_hi = sign_at(sf, hi);
  while (!(hi - lo < target)) {
    Rational mid = (lo + hi) / 2;
    int s = sign_at(sf, mid);
    if (s == 0) return {mid, mid};
    if (s == s_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

std::string to_decimal(const Rational& x, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = abs(x.get_num()) * scale / x.get_den();
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = sgn(x) < 0 ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

std::pair<std::string, long> scientific_digits(const Integer& x, unsigned digits) {
  if (sgn(x) <= 0) throw DomainError("scientific_digits needs a positive integer");
  std::string s = x.get_str();
  long exponent = static_cast<long>(s.size()) - 1;
  std::string head = s.substr(0, std::min<std::size_t>(digits, s.size()));
  if (head.size() > 1) head.insert(1, ".");
  return {head, exponent};
}

}  // namespace hamgrid
