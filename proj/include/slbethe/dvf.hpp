#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slbethe/bethe_data.hpp"
#include "slbethe/ratfun.hpp"
#include "slbethe/shapes.hpp"

namespace slbethe {

// -------------------------------------------------------------------------
// dressed vacuum form building blocks
//
// The box function for letter a of the nesting,
//
//   z(a; u) = psi_a(u) * Q_{a-1}(u + S_{a-1} + 2 p_a) * Q_a(u + S_a - 2 p_a)
//             ---------------------------------------------------------------
//                     Q_{a-1}(u + S_{a-1}) * Q_a(u + S_a)
//
// with S_a the sign prefix sum, psi_1(u) = P(u + 2 p_1) and psi_a(u) = P(u)
// otherwise, P the vacuum polynomial. Q_0 and Q_{r+s+2} are 1.
// -------------------------------------------------------------------------

template <class K>
RatFun<K> z_fn(const BetheData<K>& d, int a) {
  const Grading& g = d.g;
  if (a < 1 || a > g.size()) throw std::out_of_range("letter index");
  const int pa = g.p(a);
  const long s_prev = g.prefix_sum(a - 1);
  const long s_own = g.prefix_sum(a);
  const Poly<K> qprev = d.q_poly(a - 1);
  const Poly<K> qown = d.q_poly(a);
  const Poly<K> vac = d.vacuum_poly();
  const Poly<K> psi =
      (a == 1) ? vac.shift(scalar_from_int<K>(2L * pa)) : vac;
  Poly<K> num = psi;
  num = num * qprev.shift(scalar_from_int<K>(s_prev + 2L * pa));
  num = num * qown.shift(scalar_from_int<K>(s_own - 2L * pa));
  Poly<K> den = qprev.shift(scalar_from_int<K>(s_prev)) *
                qown.shift(scalar_from_int<K>(s_own));
  return RatFun<K>(std::move(num), std::move(den));
}

// signed weight of one filled tableau: prod over cells of p_b z(b; u + shift)
template <class K>
RatFun<K> tableau_term(const BetheData<K>& d, const Tableau& t) {
  RatFun<K> acc = RatFun<K>::one();
  const auto cs = t.shape().cells();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto [i, j] = cs[k];
    const int b = t.flat()[k];
    const int c = t.shape().cell_shift(i, j);
    RatFun<K> zf = z_fn(d, b).shift(scalar_from_int<K>(c));
    if (d.g.p(b) == -1) zf = -zf;
    acc = acc * zf;
  }
  return acc;
}

// transfer function as the sum over admissible fillings
template <class K>
RatFun<K> transfer_tableau_sum(const BetheData<K>& d, const SkewShape& sh,
                               std::size_t max_cells = 24) {
  RatFun<K> acc = RatFun<K>::zero();
  for (const Tableau& t : enumerate_tableaux(sh, d.g, max_cells))
    acc = acc + tableau_term<K>(d, t);
  return acc;
}

// -------------------------------------------------------------------------
// operator series in X = exp(2 d/du): sum_k c_k(u) X^k, with the exchange
// rule (f X^m)(g X^n) = f(u) g(u + 2m) X^{m+n}
// -------------------------------------------------------------------------

template <class K>
struct OperatorSeries {
  std::vector<RatFun<K>> c;  // c[k] multiplies X^k
  int order() const { return static_cast<int>(c.size()) - 1; }
};

template <class K>
OperatorSeries<K> series_one(int order) {
  OperatorSeries<K> s;
  s.c.assign(static_cast<std::size_t>(order) + 1, RatFun<K>::zero());
  s.c[0] = RatFun<K>::one();
  return s;
}

template <class K>
OperatorSeries<K> series_mul(const OperatorSeries<K>& a, const OperatorSeries<K>& b,
                             int order) {
  OperatorSeries<K> out;
  out.c.assign(static_cast<std::size_t>(order) + 1, RatFun<K>::zero());
  for (int i = 0; i <= std::min(order, a.order()); ++i) {
    if (a.c[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j + i <= order && j <= b.order(); ++j) {
      if (b.c[static_cast<std::size_t>(j)].is_zero()) continue;
      out.c[static_cast<std::size_t>(i + j)] =
          out.c[static_cast<std::size_t>(i + j)] +
          a.c[static_cast<std::size_t>(i)] *
              b.c[static_cast<std::size_t>(j)].shift(scalar_from_int<K>(2L * i));
    }
  }
  return out;
}

// substitution X -> -X
template <class K>
OperatorSeries<K> series_negate_x(OperatorSeries<K> s) {
  for (std::size_t k = 1; k < s.c.size(); k += 2) s.c[k] = -s.c[k];
  return s;
}

namespace detail {

// (1 + z X)^{+1} and its inverse as truncated series; the inverse uses
// (1 + zX)^{-1} = sum_k (-1)^k z(u) z(u+2) ... z(u+2k-2) X^k
template <class K>
OperatorSeries<K> binomial_factor(const RatFun<K>& z, int sign_exponent, int order,
                                  bool lower_variant) {
  OperatorSeries<K> s = series_one<K>(order);
  if (!lower_variant && sign_exponent == 1) {
    if (order >= 1) s.c[1] = z;
    return s;
  }
  if (lower_variant && sign_exponent == -1) {
    if (order >= 1) s.c[1] = -z;
    return s;
  }
  // geometric tail, signs alternate only for the upper variant
  RatFun<K> run = RatFun<K>::one();
  for (int k = 1; k <= order; ++k) {
    run = run * z.shift(scalar_from_int<K>(2L * (k - 1)));
    s.c[static_cast<std::size_t>(k)] =
        (!lower_variant && (k % 2 == 1)) ? -run : run;
  }
  return s;
}

}  // namespace detail

// (1 + z(L)X)^{p_L} ... (1 + z(1)X)^{p_1}; coefficient of X^a is T^a(u + a - 1)
template <class K>
OperatorSeries<K> upper_series(const BetheData<K>& d, int order) {
  OperatorSeries<K> acc;
  for (int a = d.g.size(); a >= 1; --a) {
    auto f = detail::binomial_factor(z_fn(d, a), d.g.p(a), order, false);
    acc = (a == d.g.size()) ? std::move(f) : series_mul(acc, f, order);
  }
  return acc;
}

// (1 - z(1)X)^{-p_1} ... (1 - z(L)X)^{-p_L}; coefficient of X^m is T_m(u + m - 1)
template <class K>
OperatorSeries<K> lower_series(const BetheData<K>& d, int order) {
  OperatorSeries<K> acc;
  for (int a = 1; a <= d.g.size(); ++a) {
    auto f = detail::binomial_factor(z_fn(d, a), d.g.p(a), order, true);
    acc = (a == 1) ? std::move(f) : series_mul(acc, f, order);
  }
  return acc;
}

// single-column transfer function T^a(u) read off the upper series
template <class K>
RatFun<K> upper_t(const OperatorSeries<K>& upper, int a) {
  if (a < 0) return RatFun<K>::zero();
  if (a == 0) return RatFun<K>::one();
  if (a > upper.order()) throw std::out_of_range("series order too small");
  return upper.c[static_cast<std::size_t>(a)].shift(scalar_from_int<K>(1L - a));
}

// single-row transfer function T_m(u) read off the lower series
template <class K>
RatFun<K> lower_t(const OperatorSeries<K>& lower, int m) {
  if (m < 0) return RatFun<K>::zero();
  if (m == 0) return RatFun<K>::one();
  if (m > lower.order()) throw std::out_of_range("series order too small");
  return lower.c[static_cast<std::size_t>(m)].shift(scalar_from_int<K>(1L - m));
}

// -------------------------------------------------------------------------
// determinant routes
// -------------------------------------------------------------------------

// fraction-free elimination (Bareiss) over the rational function field
template <class K>
RatFun<K> ratfun_det(std::vector<std::vector<RatFun<K>>> m) {
  static_assert(field<K>::exact, "determinants are certified on the exact backend");
  const std::size_t n = m.size();
  if (n == 0) return RatFun<K>::one();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  RatFun<K> prev = RatFun<K>::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return RatFun<K>::zero();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  RatFun<K> det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// entry data for the two determinant representations
struct DetEntry {
  int index;   // column length a (upper) or row length m (lower)
  long shift;  // evaluation argument is u + shift
};

inline std::vector<std::vector<DetEntry>> column_det_entries(const SkewShape& sh) {
  const Partition muc = sh.mu().conjugate();
  const Partition lac = sh.lambda().conjugate();
  const int n = sh.width();
  std::vector<std::vector<DetEntry>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1)].push_back(
          {muc.part(i) - lac.part(j) - i + j,
           static_cast<long>(-sh.width() + sh.height() - muc.part(i) - lac.part(j) +
                             i + j - 1)});
  return m;
}

inline std::vector<std::vector<DetEntry>> row_det_entries(const SkewShape& sh) {
  const int n = sh.height();
  std::vector<std::vector<DetEntry>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1)].push_back(
          {sh.mu().part(j) - sh.lambda().part(i) + i - j,
           static_cast<long>(-sh.width() + sh.height() + sh.mu().part(j) +
                             sh.lambda().part(i) - i - j + 1)});
  return m;
}

// determinant of single-column transfer functions; equals the skew transfer
// function for the same shape
template <class K>
RatFun<K> jacobi_trudi_det(const BetheData<K>& d, const SkewShape& sh) {
  const auto entries = column_det_entries(sh);
  int amax = 0;
  for (const auto& row : entries)
    for (const auto& e : row) amax = std::max(amax, e.index);
  const OperatorSeries<K> up = upper_series(d, amax);
  std::vector<std::vector<RatFun<K>>> m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& e : entries[i])
      m[i].push_back(upper_t(up, e.index).shift(scalar_from_rat<K>(Rat(e.shift))));
  return ratfun_det(std::move(m));
}

// dual determinant built from single-row transfer functions
template <class K>
RatFun<K> giambelli_dual_det(const BetheData<K>& d, const SkewShape& sh) {
  const auto entries = row_det_entries(sh);
  int mmax = 0;
  for (const auto& row : entries)
    for (const auto& e : row) mmax = std::max(mmax, e.index);
  const OperatorSeries<K> low = lower_series(d, mmax);
  std::vector<std::vector<RatFun<K>>> m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& e : entries[i])
      m[i].push_back(lower_t(low, e.index).shift(scalar_from_rat<K>(Rat(e.shift))));
  return ratfun_det(std::move(m));
}

// -------------------------------------------------------------------------
// u-independent limit: every z(a; .) replaced by the constant x_a, shifts
// dropped; the tableau sum becomes a super Schur character
// -------------------------------------------------------------------------

template <class K>
K character_value(const Grading& g, const SkewShape& sh, const std::vector<K>& x,
                  std::size_t max_cells = 24) {
  if (static_cast<int>(x.size()) != g.size())
    throw std::invalid_argument("one character variable per letter required");
  K acc = field<K>::zero();
  for (const Tableau& t : enumerate_tableaux(sh, g, max_cells)) {
    K term = field<K>::one();
    for (int b : t.flat()) {
      term = term * x[static_cast<std::size_t>(b - 1)];
      if (g.p(b) == -1) term = field<K>::zero() - term;
    }
    acc = acc + term;
  }
  return acc;
}

template <class K>
K scalar_det(std::vector<std::vector<K>> m) {
  const std::size_t n = m.size();
  if (n == 0) return field<K>::one();
  K prev = field<K>::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (field<K>::is_zero(m[k][k])) {
      std::size_t sw = k + 1;
      while (sw < n && field<K>::is_zero(m[sw][k])) ++sw;
      if (sw == n) return field<K>::zero();
      std::swap(m[k], m[sw]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return negate ? (field<K>::zero() - det) : det;
}

// classical counterpart of the column determinant: commuting variables, so
// the series coefficients are plain products of truncated geometric series
template <class K>
K character_det(const Grading& g, const SkewShape& sh, const std::vector<K>& x) {
  const auto entries = column_det_entries(sh);
  int amax = 0;
  for (const auto& row : entries)
    for (const auto& e : row) amax = std::max(amax, e.index);
  // coefficients of prod_a (1 + x_a X)^{p_a} up to X^amax
  std::vector<K> coef(static_cast<std::size_t>(amax) + 1, field<K>::zero());
  coef[0] = field<K>::one();
  for (int a = 1; a <= g.size(); ++a) {
    std::vector<K> next(coef.size(), field<K>::zero());
    if (g.p(a) == 1) {
      for (std::size_t k = 0; k < coef.size(); ++k) {
        next[k] = next[k] + coef[k];
        if (k + 1 < coef.size())
          next[k + 1] = next[k + 1] + coef[k] * x[static_cast<std::size_t>(a - 1)];
      }
    } else {
      // divide by (1 + x_a X): next = coef * sum_k (-x_a)^k X^k
      K pw = field<K>::one();
      std::vector<K> inv(coef.size(), field<K>::zero());
      for (std::size_t k = 0; k < inv.size(); ++k) {
        inv[k] = pw;
        pw = (field<K>::zero() - pw) * x[static_cast<std::size_t>(a - 1)];
      }
      for (std::size_t i = 0; i < coef.size(); ++i)
        for (std::size_t j = 0; i + j < next.size(); ++j)
          next[i + j] = next[i + j] + coef[i] * inv[j];
    }
    coef = std::move(next);
  }
  auto t_of = [&](int a) -> K {
    if (a < 0) return field<K>::zero();
    return coef[static_cast<std::size_t>(a)];
  };
  std::vector<std::vector<K>> m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& e : entries[i]) m[i].push_back(t_of(e.index));
  return scalar_det(std::move(m));
}

// -------------------------------------------------------------------------
// point evaluation: everything above, specialized to one exact abscissa and
// an integer offset window; used by the sampled identity certificates
// -------------------------------------------------------------------------

template <class K>
class PointEval {
 public:
  PointEval(const BetheData<K>& d, K x, int offset_lo, int offset_hi, int max_order)
      : d_(&d), x_(std::move(x)), order_(std::max(1, max_order)) {
    const int nfac = d.g.size();
    max_order = order_;
    // coefficient window needed so that T^a(x + t) = c_a(x + t + 1 - a) is
    // available for t in [offset_lo, offset_hi] and a up to max_order
    clo_ = offset_lo - max_order + 1;
    chi_ = offset_hi + 1;
    // each series multiplication peeks 2*order to the right, and factor k
    // products reach a further 2*(order-1)
    zlo_ = clo_;
    zhi_ = chi_ + 2 * max_order * nfac + 2 * (max_order - 1);
    build_tables();
  }

  const K& z_at(int a, int t) const {
    return z_[static_cast<std::size_t>(a - 1)]
             [static_cast<std::size_t>(t - zlo_)];
  }

  K upper_t_at(int a, int t) const { return t_from(uc_, a, t); }
  K lower_t_at(int m, int t) const { return t_from(lc_, m, t); }

  const K& abscissa() const { return x_; }

 private:
  using Window = std::vector<std::vector<K>>;  // [k][t - clo_]

  K t_from(const Window& w, int a, int t) const {
    if (a < 0) return field<K>::zero();
    if (a == 0) return field<K>::one();
    if (a > order_) throw std::out_of_range("point series order too small");
    const int off = t + 1 - a;
    if (off < clo_ || off > chi_) throw std::out_of_range("offset outside window");
    return w[static_cast<std::size_t>(a)][static_cast<std::size_t>(off - clo_)];
  }

  void build_tables() {
    const Grading& g = d_->g;
    const std::size_t width = static_cast<std::size_t>(zhi_ - zlo_ + 1);
    // z values over the full window; a pole here means the abscissa is bad
    z_.assign(static_cast<std::size_t>(g.size()), std::vector<K>(width));
    const Poly<K> vac = d_->vacuum_poly();
    std::vector<Poly<K>> q(static_cast<std::size_t>(g.size()) + 1);
    for (int b = 0; b <= g.size(); ++b) q[static_cast<std::size_t>(b)] = d_->q_poly(b);
    for (int a = 1; a <= g.size(); ++a) {
      const int pa = g.p(a);
      const long sp = g.prefix_sum(a - 1), so = g.prefix_sum(a);
      for (int t = zlo_; t <= zhi_; ++t) {
        const K u = x_ + scalar_from_int<K>(t);
        const K psi = (a == 1) ? vac.eval(u + scalar_from_int<K>(2L * pa)) : vac.eval(u);
        const K nprev = q[static_cast<std::size_t>(a - 1)].eval(
            u + scalar_from_int<K>(sp + 2L * pa));
        const K nown = q[static_cast<std::size_t>(a)].eval(
            u + scalar_from_int<K>(so - 2L * pa));
        const K dprev = q[static_cast<std::size_t>(a - 1)].eval(u + scalar_from_int<K>(sp));
        const K down = q[static_cast<std::size_t>(a)].eval(u + scalar_from_int<K>(so));
        if (field<K>::is_zero(dprev) || field<K>::is_zero(down))
          throw std::domain_error("abscissa hits a shifted root");
        z_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(t - zlo_)] =
            psi * nprev * nown / (dprev * down);
      }
    }
    uc_ = product_window(/*lower=*/false);
    lc_ = product_window(/*lower=*/true);
  }

  // factor series values for letter a on [lo, hi]
  Window factor_window(int a, bool lower, int lo, int hi) const {
    const int p = d_->g.p(a);
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    Window w(static_cast<std::size_t>(order_) + 1, std::vector<K>(width, field<K>::zero()));
    for (std::size_t i = 0; i < width; ++i) w[0][i] = field<K>::one();
    const bool single = (!lower && p == 1) || (lower && p == -1);
    for (int t = lo; t <= hi; ++t) {
      const std::size_t i = static_cast<std::size_t>(t - lo);
      if (single) {
        if (order_ >= 1) {
          w[1][i] = z_at(a, t);
          if (lower) w[1][i] = field<K>::zero() - w[1][i];
        }
        continue;
      }
      K run = field<K>::one();
      for (int k = 1; k <= order_; ++k) {
        run = run * z_at(a, t + 2 * (k - 1));
        w[static_cast<std::size_t>(k)][i] =
            (!lower && (k % 2 == 1)) ? (field<K>::zero() - run) : run;
      }
    }
    return w;
  }

  Window product_window(bool lower) const {
    const Grading& g = d_->g;
    const int nfac = g.size();
    // ordering matches the symbolic series: upper runs from letter L down to
    // 1, lower from 1 up to L
    std::vector<int> letters;
    for (int i = 0; i < nfac; ++i)
      letters.push_back(lower ? (i + 1) : (nfac - i));
    // valid range shrinks by 2*order_ with each multiplication
    int lo = clo_, hi = chi_ + 2 * order_ * (nfac - 1);
    Window acc = factor_window(letters[0], lower, lo, hi + 2 * order_);
    int acc_hi = hi + 2 * order_;
    for (std::size_t f = 1; f < letters.size(); ++f) {
      const Window fac = factor_window(letters[f], lower, lo, acc_hi);
      const int new_hi = acc_hi - 2 * order_;
      const std::size_t width = static_cast<std::size_t>(new_hi - lo + 1);
      Window next(static_cast<std::size_t>(order_) + 1,
                  std::vector<K>(width, field<K>::zero()));
      for (int n = 0; n <= order_; ++n)
        for (int i = 0; i <= n; ++i)
          for (int t = lo; t <= new_hi; ++t) {
            const K& av = acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - lo)];
            if (field<K>::is_zero(av)) continue;
            next[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - lo)] =
                next[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - lo)] +
                av * fac[static_cast<std::size_t>(n - i)]
                        [static_cast<std::size_t>(t + 2 * i - lo)];
          }
      acc = std::move(next);
      acc_hi = new_hi;
    }
    return acc;
  }

  const BetheData<K>* d_;
  K x_;
  int order_;
  int clo_, chi_, zlo_, zhi_;
  std::vector<std::vector<K>> z_;
  Window uc_, lc_;
};

}  // namespace slbethe
