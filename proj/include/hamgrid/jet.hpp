#ifndef HAMGRID_JET_HPP
#define HAMGRID_JET_HPP

// Second-order Taylor jets in two markers around w = 1: a value stands for
//   c0 + c_a e + c_b d + c_aa e^2 + c_ab e d + c_bb d^2   (mod degree 3)
// where the markers are w_a = 1 + e and w_b = 1 + d.

#include <array>
#include <cstddef>

#include "hamgrid/algebra.hpp"

namespace hamgrid {

struct Jet {
  enum Slot : std::size_t { k1 = 0, kA = 1, kB = 2, kAA = 3, kAB = 4, kBB = 5 };
  std::array<Integer, 6> c;

  Jet() = default;
  explicit Jet(long v) { c[k1] = v; }

  /// Jet of w_a^i w_b^j: binomial expansion of (1+e)^i (1+d)^j.
  static Jet power(unsigned i, unsigned j) {
    Jet out;
    const Integer I = i, J = j;
    out.c[k1] = 1;
    out.c[kA] = I;
    out.c[kB] = J;
    out.c[kAA] = I * (I - 1) / 2;
    out.c[kAB] = I * J;
    out.c[kBB] = J * (J - 1) / 2;
    return out;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k < 6; ++k) {
      if (sgn(o.c[k]) != 0) mpz_add(c[k].get_mpz_t(), c[k].get_mpz_t(), o.c[k].get_mpz_t());
    }
    return *this;
  }

  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    auto fma = [](Integer& acc, const Integer& a, const Integer& b) {
      if (sgn(a) != 0 && sgn(b) != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    };
    fma(r.c[k1], x.c[k1], y.c[k1]);
    fma(r.c[kA], x.c[k1], y.c[kA]);
    fma(r.c[kA], x.c[kA], y.c[k1]);
    fma(r.c[kB], x.c[k1], y.c[kB]);
    fma(r.c[kB], x.c[kB], y.c[k1]);
    fma(r.c[kAA], x.c[k1], y.c[kAA]);
    fma(r.c[kAA], x.c[kA], y.c[kA]);
    fma(r.c[kAA], x.c[kAA], y.c[k1]);
    fma(r.c[kBB], x.c[k1], y.c[kBB]);
    fma(r.c[kBB], x.c[kB], y.c[kB]);
    fma(r.c[kBB], x.c[kBB], y.c[k1]);
    fma(r.c[kAB], x.c[k1], y.c[kAB]);
    fma(r.c[kAB], x.c[kA], y.c[kB]);
    fma(r.c[kAB], x.c[kB], y.c[kA]);
    fma(r.c[kAB], x.c[kAB], y.c[k1]);
    return r;
  }

  friend bool operator==(const Jet& x, const Jet& y) { return x.c == y.c; }
};

}  // namespace hamgrid

#endif  // HAMGRID_JET_HPP
