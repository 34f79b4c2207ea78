#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "slbethe/scalars.hpp"

namespace slbethe {

// Dense univariate polynomial over K, coefficients stored lowest degree
// first. The zero polynomial has an empty coefficient vector and reports
// degree() == -1; code that branches on degree must treat -1 as "zero", not
// as a valid exponent.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly zero() { return Poly(); }
  static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
  static Poly one() { return constant(field<K>::one()); }
  // u + c0, handy for building linear factors
  static Poly linear(const K& c0) {
    return Poly(std::vector<K>{c0, field<K>::one()});
  }

  // monic product of (u - root) over the given roots
  static Poly from_roots(const std::vector<K>& roots) {
    Poly p = one();
    for (const K& r : roots) {
      K mr = field<K>::zero() - r;
      p = p * linear(mr);
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }

  const K& operator[](std::size_t i) const { return c_[i]; }
  K coeff(int i) const {
    if (i < 0 || i > degree()) return field<K>::zero();
    return c_[static_cast<std::size_t>(i)];
  }
  const K& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  K eval(const K& x) const {
    K acc = field<K>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<K> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * scalar_from_int<K>(static_cast<long>(i));
    return Poly(std::move(d));
  }

  // composition u -> u + t, i.e. returns p(u + t)
  Poly shift(const K& t) const {
    if (is_zero()) return zero();
    std::vector<K> out;  // Horner on the symbolic variable (u + t)
    out.reserve(c_.size());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      // out := out * (u + t) + coeff
      std::vector<K> next(out.size() + 1, field<K>::zero());
      for (std::size_t i = 0; i < out.size(); ++i) {
        next[i + 1] = next[i + 1] + out[i];
        next[i] = next[i] + out[i] * t;
      }
      if (next.empty()) next.push_back(field<K>::zero());
      next[0] = next[0] + *it;
      out = std::move(next);
    }
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<K> out(c_);
    for (K& v : out) v = field<K>::zero() - v;
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> out(std::max(a.c_.size(), b.c_.size()), field<K>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, field<K>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const K& s) {
    std::vector<K> out(a.c_);
    for (K& v : out) v = v * s;
    return Poly(std::move(out));
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // quotient/remainder by a nonzero divisor; exact field only
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    static_assert(field<K>::exact, "polynomial division needs exact arithmetic");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q = zero(), r = a;
    const K inv_lead = field<K>::one() / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int k = r.degree() - b.degree();
      const K f = r.leading() * inv_lead;
      std::vector<K> qc(static_cast<std::size_t>(k) + 1, field<K>::zero());
      qc.back() = f;
      const Poly term(std::move(qc));
      q = q + term;
      r = r - term * b;
    }
    return {q, r};
  }

  // monic-remainder Euclid; result is monic (or zero when both inputs are zero)
  friend Poly gcd(Poly a, Poly b) {
    static_assert(field<K>::exact, "gcd needs exact arithmetic");
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      if (!r.is_zero()) r = r.monic();
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const K inv = field<K>::one() / leading();
    return (*this) * inv;
  }

  // drops leading coefficients small relative to the largest one; floating
  // use only, for differences of monic products whose top terms cancel
  Poly trimmed_leading(double rel_tol) const {
    static_assert(!field<K>::exact, "exact polynomials never need fuzzy trims");
    double scale = 0.0;
    for (const K& v : c_) scale = std::max(scale, field<K>::to_double(v));
    if (scale == 0.0) return zero();
    std::vector<K> out(c_);
    while (!out.empty() && field<K>::to_double(out.back()) <= rel_tol * scale)
      out.pop_back();
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && field<K>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

using PolyQ = Poly<Rat>;
using PolyC = Poly<CD>;

}  // namespace slbethe
