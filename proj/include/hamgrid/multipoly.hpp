#ifndef HAMGRID_MULTIPOLY_HPP
#define HAMGRID_MULTIPOLY_HPP

// Sparse multivariate polynomials keyed by exponent vectors. Variable 0 is
// z by convention, variables 1..M are the row markers w_1..w_M.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hamgrid/algebra.hpp"
#include "hamgrid/errors.hpp"

namespace hamgrid {

inline constexpr std::size_t kMaxVars = 12;

using Exponents = std::array<std::uint16_t, kMaxVars>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Exponents make_exponents(std::initializer_list<unsigned> values) {
  if (values.size() > kMaxVars) throw DomainError("too many variables");
  Exponents e{};
  std::size_t i = 0;
  for (unsigned v : values) e[i++] = static_cast<std::uint16_t>(v);
  return e;
}

template <class Coeff>
class BasicMultiPoly {
 public:
  using Terms = std::unordered_map<Exponents, Coeff, ExponentsHash>;

  BasicMultiPoly() = default;
  explicit BasicMultiPoly(std::size_t nvars) : nvars_(check_vars(nvars)) {}

  static BasicMultiPoly constant(std::size_t nvars, const Coeff& c) {
    BasicMultiPoly p(nvars);
    p.add_term(Exponents{}, c);
    return p;
  }
  static BasicMultiPoly monomial(std::size_t nvars, const Exponents& e, const Coeff& c = Coeff(1)) {
    BasicMultiPoly p(nvars);
    p.add_term(e, c);
    return p;
  }
  static BasicMultiPoly variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Exponents e{};
    e[index] = static_cast<std::uint16_t>(power);
    return monomial(nvars, e);
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicMultiPoly& operator*=(const Coeff& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  /// Multiplication by a single monomial; shifts every exponent.
  BasicMultiPoly shifted(const Exponents& e) const {
    BasicMultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) out.terms_.emplace(add(x, e), c);
    return out;
  }

  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a) { return a *= Coeff(-1); }
  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    BasicMultiPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
    }
    return out;
  }
  friend bool operator==(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Removes every term with some exponent above its cap.
  void truncate_above(const Exponents& caps) {
    std::erase_if(terms_, [&](const auto& kv) {
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (kv.first[i] > caps[i]) return true;
      }
      return false;
    });
  }
  /// Removes the terms rejected by the predicate.
  template <class Pred>
  void keep_if(Pred&& pred) {
    std::erase_if(terms_, [&](const auto& kv) { return !pred(kv.first); });
  }

  /// Substitutes value for variable index.
  BasicMultiPoly substitute(std::size_t index, const Coeff& value) const {
    BasicMultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Coeff v = c;
      for (unsigned k = 0; k < e[index]; ++k) v *= value;
      Exponents f = e;
      f[index] = 0;
      out.add_term(f, v);
    }
    return out;
  }

  Coeff sum_of_coefficients() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Terms sorted lexicographically by exponent vector, largest first.
  std::vector<std::pair<Exponents, Coeff>> sorted_terms() const {
    std::vector<std::pair<Exponents, Coeff>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return v;
  }

  /// Exact division. Throws DomainError if the divisor does not divide.
  friend BasicMultiPoly exact_divide(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    if (b.is_zero()) throw DomainError("multivariate division by zero");
    auto bt = b.sorted_terms();
    const auto& [lead_e, lead_c] = bt.front();
    std::map<Exponents, Coeff, std::greater<>> rem(a.terms_.begin(), a.terms_.end());
    BasicMultiPoly q(std::max(a.nvars_, b.nvars_));
    while (!rem.empty()) {
      auto top = rem.begin();
      Exponents qe{};
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (top->first[i] < lead_e[i]) throw DomainError("inexact multivariate division");
        qe[i] = static_cast<std::uint16_t>(top->first[i] - lead_e[i]);
      }
      Coeff qc = divide_coeff(top->second, lead_c);
      q.terms_.emplace(qe, qc);
      for (const auto& [e, c] : bt) {
        auto key = add(e, qe);
        auto it = rem.find(key);
        Coeff delta = c * qc;
        if (it == rem.end()) {
          rem.emplace(key, -delta);
        } else {
          it->second -= delta;
          if (sgn(it->second) == 0) rem.erase(it);
        }
      }
    }
    return q;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
      const bool neg = sgn(c) < 0;
      Coeff mag = neg ? Coeff(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      bool wrote = false;
      if (!(mag == 1) || constant_term) {
        os << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  static std::size_t check_vars(std::size_t n) {
    if (n > kMaxVars) throw DomainError("at most " + std::to_string(kMaxVars) + " variables");
    return n;
  }
  static Exponents add(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
  }
  static Coeff divide_coeff(const Coeff& a, const Coeff& b) {
    if constexpr (std::is_same_v<Coeff, Integer>) {
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw DomainError("inexact multivariate division");
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    } else {
      return Coeff(a / b);
    }
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using MultiPoly = BasicMultiPoly<Rational>;
using IntMultiPoly = BasicMultiPoly<Integer>;

inline MultiPoly to_rational(const IntMultiPoly& p) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, Rational(c));
  return out;
}

/// Names z, w1, ..., wM.
inline std::vector<std::string> grid_variable_names(int M) {
  std::vector<std::string> names{"z"};
  for (int i = 1; i <= M; ++i) names.push_back("w" + std::to_string(i));
  return names;
}

}  // namespace hamgrid

#endif  // HAMGRID_MULTIPOLY_HPP
