#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slbethe/poly.hpp"

namespace slbethe {

// Rational function num/den over K. Exact instances are kept in canonical
// form: gcd(num, den) = 1 and den monic, so operator== on the parts decides
// equality of the functions. Floating instances skip the gcd (no meaningful
// gcd in inexact arithmetic) but still keep den monic.
template <class K>
class RatFun {
 public:
  RatFun() : num_(Poly<K>::zero()), den_(Poly<K>::one()) {}
  RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }
  explicit RatFun(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::one()) {}
  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(Poly<K>::one()); }
  static RatFun constant(const K& v) { return RatFun(Poly<K>::constant(v)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFun operator*(const RatFun& a, const K& s) {
    return RatFun(a.num_ * s, a.den_);
  }

  // f(u + t)
  RatFun shift(const K& t) const { return RatFun(num_.shift(t), den_.shift(t)); }

  K eval(const K& x) const {
    const K d = den_.eval(x);
    if (field<K>::is_zero(d)) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
  }

  // residue at a simple pole p; returns 0 when p is not a pole at all.
  // num(p) / den'(p) is exact for a simple zero of den, because in canonical
  // form num and den share no factor.
  K residue_at(const K& p) const {
    const K d = den_.eval(p);
    if (!field<K>::is_zero(d)) return field<K>::zero();
    const K dprime = den_.derivative().eval(p);
    if (field<K>::is_zero(dprime))
      throw std::domain_error("residue at a pole of order > 1");
    return num_.eval(p) / dprime;
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    static_assert(field<K>::exact,
                  "decidable equality requires the exact backend");
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  void normalize() {
    if constexpr (field<K>::exact) {
      if (num_.is_zero()) {
        den_ = Poly<K>::one();
        return;
      }
      const Poly<K> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
      const K inv = field<K>::one() / den_.leading();
      num_ = num_ * inv;
      den_ = den_ * inv;
    } else {
      const K lead = den_.leading();
      const K inv = field<K>::one() / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<K> num_, den_;
};

// Proof-by-evaluation equality for exact rational functions: the cross
// polynomial n_a d_b - n_b d_a has degree at most the bound below, so
// vanishing at bound+1 distinct points decides equality. Used to cross-check
// the canonical (gcd) path and as the fast route for large identities.
template <class K>
bool equal_by_sampling(const RatFun<K>& a, const RatFun<K>& b) {
  static_assert(field<K>::exact, "sampling proof needs exact arithmetic");
  const long bound =
      std::max(a.num().degree() + b.den().degree(),
               b.num().degree() + a.den().degree());
  if (bound < 0) return a.num().is_zero() && b.num().is_zero();
  for (long i = 0; i <= bound; ++i) {
    const K x = scalar_from_int<K>(i);
    const K cross = a.num().eval(x) * b.den().eval(x) - b.num().eval(x) * a.den().eval(x);
    if (!field<K>::is_zero(cross)) return false;
  }
  return true;
}

using RatFunQ = RatFun<Rat>;
using RatFunC = RatFun<CD>;

// numerical counterpart for the floating lane: worst relative defect of
// a - b over a fixed comb of off-axis points, with a denominator guard so
// near-poles do not poison the estimate
inline double float_defect(const RatFunC& a, const RatFunC& b, int points = 9) {
  double worst = 0.0;
  int used = 0;
  for (int k = 0; used < points && k < 4 * points; ++k) {
    const CD x(0.37 + 0.79 * k, 0.23 + 0.11 * (k % 3));
    const CD da = a.den().eval(x), db = b.den().eval(x);
    if (std::abs(da) < 1e-8 || std::abs(db) < 1e-8) continue;
    const CD va = a.num().eval(x) / da, vb = b.num().eval(x) / db;
    const double scale = std::max({1.0, std::abs(va), std::abs(vb)});
    worst = std::max(worst, std::abs(va - vb) / scale);
    ++used;
  }
  return worst;
}

}  // namespace slbethe
