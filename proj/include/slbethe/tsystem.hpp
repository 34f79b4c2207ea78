#pragma once

#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "slbethe/certify.hpp"

namespace slbethe {

// rectangle with a rows and m columns; either length zero gives the empty
// shape, whose transfer function is 1
inline SkewShape rectangle_shape(int a, int m) {
  if (a < 0 || m < 0) throw std::invalid_argument("rectangle side lengths");
  if (a == 0 || m == 0) return SkewShape();
  return SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(a), m)));
}

enum class CheckMode { canonical, sampled };

// cache of rectangular transfer functions T^a_m(u) = T_{(m^a)}(u) for
// 0 <= a <= a_max, 0 <= m <= m_max. Symbolic entries are built lazily from
// the column determinant over a shared generating series; the point bank
// serves the sampled certificates. Lazy filling is not thread safe.
template <class K>
class TGrid {
 public:
  TGrid(BetheData<K> d, int a_max, int m_max)
      : d_(std::move(d)), amax_(a_max), mmax_(m_max) {
    if (a_max < 0 || m_max < 0) throw std::invalid_argument("grid bounds");
  }

  const BetheData<K>& data() const { return d_; }
  int a_max() const { return amax_; }
  int m_max() const { return mmax_; }

  const RatFun<K>& at(int a, int m) {
    check_bounds(a, m);
    const auto key = std::make_pair(a, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RatFun<K> value;
    if (a == 0 || m == 0) {
      value = RatFun<K>::one();
    } else {
      ensure_series();
      const auto entries = column_det_entries(rectangle_shape(a, m));
      std::vector<std::vector<RatFun<K>>> mat(entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i)
        for (const DetEntry& e : entries[i])
          mat[i].push_back(
              upper_t(*up_, e.index).shift(scalar_from_int<K>(e.shift)));
      value = ratfun_det(std::move(mat));
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

  EvalBank<K>& bank() {
    if (!bank_) {
      // window covers every rectangle argument in the grid plus the +-1
      // shifts of the bilinear relation
      const int span = mmax_ + 2;
      bank_.emplace(d_, -span, span, amax_ + mmax_);
    }
    return *bank_;
  }

  void check_bounds(int a, int m) const {
    if (a < 0 || a > amax_ || m < 0 || m > mmax_)
      throw std::out_of_range("grid index outside configured bounds");
  }

 private:
  void ensure_series() {
    if (!up_) up_ = upper_series(d_, amax_ + mmax_ - 1);
  }

  BetheData<K> d_;
  int amax_, mmax_;
  std::optional<OperatorSeries<K>> up_;
  std::map<std::pair<int, int>, RatFun<K>> memo_;
  std::optional<EvalBank<K>> bank_;
};

namespace detail {

inline std::vector<std::vector<DetEntry>> rect_entries(int a, int m, long shift) {
  auto entries = column_det_entries(rectangle_shape(a, m));
  for (auto& row : entries)
    for (DetEntry& e : row) e.shift += shift;
  return entries;
}

template <class K>
K rect_value_at(const PointEval<K>& pe,
                const std::vector<std::vector<DetEntry>>& entries) {
  return det_value_at(pe, entries, false);
}

// evaluates a signed sum of products of rectangle determinants at exact
// points; `terms` lists (sign, factors) with each factor (a, m, shift)
struct RectFactor {
  int a, m;
  long shift;
};
struct RectTerm {
  int sign;
  std::vector<RectFactor> factors;
};

template <class K>
Certificate certify_rect_combination_sampled(EvalBank<K>& bank,
                                             const std::vector<RectTerm>& terms,
                                             std::string name) {
  static_assert(field<K>::exact, "sampled certificates require exact arithmetic");
  const BetheData<K>& d = bank.data();
  Certificate cert;
  cert.name = std::move(name);
  cert.method = "sampled";

  // common denominator bound: per term, the Q-factor multiplicities of its
  // determinant factors add; across terms take the worst case
  DenKeyMap total;
  long cells_max = 0;
  for (const RectTerm& t : terms) {
    DenKeyMap term_map;
    long cells = 0;
    for (const RectFactor& f : t.factors) {
      term_map = key_map_sum(
          term_map, det_den_key_map(d.g, rect_entries(f.a, f.m, f.shift), false));
      cells += static_cast<long>(f.a) * f.m;
    }
    total = key_map_max(total, term_map);
    cells_max = std::max(cells_max, cells);
  }
  cert.degree_bound =
      static_cast<long>(d.sites()) * cells_max + den_degree(d, total);
  const long want = cert.degree_bound + 1;

  std::vector<std::vector<std::vector<std::vector<DetEntry>>>> cached;
  for (const RectTerm& t : terms) {
    std::vector<std::vector<std::vector<DetEntry>>> fs;
    for (const RectFactor& f : t.factors)
      fs.push_back(rect_entries(f.a, f.m, f.shift));
    cached.push_back(std::move(fs));
  }

  long taken = 0;
  long n = 0;
  const long attempt_cap = want + 64;
  for (long tries = 0; taken < want && tries < attempt_cap; ++tries, ++n) {
    const PointEval<K>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;
    }
    K acc = field<K>::zero();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      K prod = field<K>::one();
      for (const auto& entries : cached[t])
        prod = prod * rect_value_at(*pe, entries);
      if (terms[t].sign >= 0)
        acc = acc + prod;
      else
        acc = acc - prod;
    }
    if (!field<K>::is_zero(acc)) {
      cert.samples = taken + 1;
      cert.pass = false;
      std::ostringstream os;
      os << "nonzero residual at u = " << n;
      cert.detail = os.str();
      return cert;
    }
    ++taken;
  }
  cert.samples = taken;
  if (taken < want) {
    cert.pass = false;
    cert.detail = "could not collect enough pole-free sample points";
  } else {
    cert.pass = true;
    cert.detail = "residual vanishes at every sample point";
  }
  return cert;
}

}  // namespace detail

// bilinear relation among neighboring rectangles,
//   T^a_m(u-1) T^a_m(u+1) = T^a_{m+1}(u) T^a_{m-1}(u) + T^{a-1}_m(u) T^{a+1}_m(u)
template <class K>
Certificate hirota_check(TGrid<K>& grid, int a, int m,
                         CheckMode mode = CheckMode::sampled) {
  if (a < 1 || m < 1) throw std::invalid_argument("relation needs a, m >= 1");
  grid.check_bounds(a + 1, m + 1);
  std::ostringstream nm;
  nm << "hirota a=" << a << " m=" << m << " grading " << grid.data().g.signs();
  if (mode == CheckMode::canonical) {
    Certificate cert;
    cert.name = nm.str();
    cert.method = "canonical";
    const RatFun<K> lhs = grid.at(a, m).shift(scalar_from_int<K>(-1)) *
                          grid.at(a, m).shift(scalar_from_int<K>(1));
    const RatFun<K> rhs = grid.at(a, m + 1) * grid.at(a, m - 1) +
                          grid.at(a - 1, m) * grid.at(a + 1, m);
    cert.pass = (lhs == rhs);
    cert.detail = cert.pass ? "canonical forms agree" : "canonical forms differ";
    return cert;
  }
  using detail::RectTerm;
  const std::vector<RectTerm> terms = {
      {+1, {{a, m, -1}, {a, m, +1}}},
      {-1, {{a, m + 1, 0}, {a, m - 1, 0}}},
      {-1, {{a - 1, m, 0}, {a + 1, m, 0}}},
  };
  return detail::certify_rect_combination_sampled(grid.bank(), terms, nm.str());
}

// the quarter lattice a >= r+2, m >= s+2 vanishes identically while the
// bordering lines stay generically nonzero
template <class K>
Certificate vanishing_check(TGrid<K>& grid, int r, int s,
                            CheckMode mode = CheckMode::sampled) {
  const Grading& g = grid.data().g;
  if (r != g.r() || s != g.s())
    throw std::invalid_argument("rank parameters disagree with the grading");
  grid.check_bounds(r + 3, s + 3);
  Certificate cert;
  cert.name = "vanishing grading " + g.signs();
  cert.method = (mode == CheckMode::canonical) ? "canonical" : "sampled";
  cert.pass = true;
  long samples = 0, bound = 0;
  std::ostringstream log;
  auto fail = [&](const std::string& msg) {
    cert.pass = false;
    cert.detail = msg;
  };
  for (int a = r + 2; a <= r + 3 && cert.pass; ++a)
    for (int m = s + 2; m <= s + 3 && cert.pass; ++m) {
      if (mode == CheckMode::canonical) {
        if (!grid.at(a, m).is_zero()) {
          std::ostringstream os;
          os << "entry a=" << a << " m=" << m << " is not identically zero";
          fail(os.str());
        }
      } else {
        Certificate sub = detail::certify_rect_combination_sampled(
            grid.bank(),
            std::vector<detail::RectTerm>{{+1, {{a, m, 0}}}},
            "zero");
        samples += sub.samples;
        bound = std::max(bound, sub.degree_bound);
        if (!sub.pass) {
          std::ostringstream os;
          os << "entry a=" << a << " m=" << m << " is not identically zero";
          fail(os.str());
        }
      }
    }
  // the complement side: nonzero needs one witness point each
  if (cert.pass) {
    std::vector<std::pair<int, int>> border;
    for (int m = s + 2; m <= s + 3; ++m) border.push_back({r + 1, m});
    for (int a = r + 2; a <= r + 3; ++a) border.push_back({a, s + 1});
    for (const auto& [a, m] : border) {
      if (a == 0 || m == 0) continue;  // boundary entries are the constant 1
      bool witness = false;
      const auto entries = detail::rect_entries(a, m, 0);
      for (long n = 0; n < 64 && !witness; ++n) {
        try {
          const PointEval<K>& pe = grid.bank().at(n);
          if (!field<K>::is_zero(detail::rect_value_at(pe, entries)))
            witness = true;
          ++samples;
        } catch (const std::domain_error&) {
        }
      }
      if (!witness) {
        std::ostringstream os;
        os << "border entry a=" << a << " m=" << m << " has no nonzero witness";
        fail(os.str());
        break;
      }
    }
  }
  cert.degree_bound = bound;
  cert.samples = samples;
  if (cert.pass)
    cert.detail = "vanishing block zero, bordering lines witnessed nonzero";
  return cert;
}

// two-term forms the bilinear relation collapses to along the truncation
// border: a = r+1 with m >= s+2 drops the a-direction term, m = s+1 with
// a >= r+2 drops the m-direction term
template <class K>
Certificate restricted_relations(TGrid<K>& grid, int r, int s,
                                 CheckMode mode = CheckMode::sampled) {
  const Grading& g = grid.data().g;
  if (r != g.r() || s != g.s())
    throw std::invalid_argument("rank parameters disagree with the grading");
  grid.check_bounds(r + 1, s + 4);
  grid.check_bounds(r + 4, s + 1);
  Certificate cert;
  cert.name = "restricted-relations grading " + g.signs();
  cert.method = (mode == CheckMode::canonical) ? "canonical" : "sampled";
  cert.pass = true;
  long samples = 0, bound = 0;
  using detail::RectTerm;
  auto run_two_term = [&](int a, int m, bool drop_a_direction,
                          const std::string& label) {
    if (!cert.pass) return;
    std::vector<RectTerm> terms = {{+1, {{a, m, -1}, {a, m, +1}}}};
    if (drop_a_direction)
      terms.push_back({-1, {{a, m + 1, 0}, {a, m - 1, 0}}});
    else
      terms.push_back({-1, {{a - 1, m, 0}, {a + 1, m, 0}}});
    if (mode == CheckMode::canonical) {
      const RatFun<K> lhs = grid.at(a, m).shift(scalar_from_int<K>(-1)) *
                            grid.at(a, m).shift(scalar_from_int<K>(1));
      const RatFun<K> rhs =
          drop_a_direction
              ? grid.at(a, m + 1) * grid.at(a, m - 1)
              : grid.at(a - 1, m) * grid.at(a + 1, m);
      if (!(lhs == rhs)) {
        cert.pass = false;
        cert.detail = label + " fails canonically";
      }
      return;
    }
    Certificate sub =
        detail::certify_rect_combination_sampled(grid.bank(), terms, label);
    samples += sub.samples;
    bound = std::max(bound, sub.degree_bound);
    if (!sub.pass) {
      cert.pass = false;
      cert.detail = label + ": " + sub.detail;
    }
  };
  for (int m = s + 2; m <= s + 3; ++m) {
    std::ostringstream os;
    os << "column line a=" << r + 1 << " m=" << m;
    run_two_term(r + 1, m, true, os.str());
  }
  for (int a = r + 2; a <= r + 3; ++a) {
    std::ostringstream os;
    os << "row line a=" << a << " m=" << s + 1;
    run_two_term(a, s + 1, false, os.str());
  }
  cert.degree_bound = bound;
  cert.samples = samples;
  if (cert.pass) cert.detail = "both truncation lines reduce to two-term forms";
  return cert;
}

namespace detail {

// floating lane: signed term sum evaluated at integer abscissae, normalized
// by the largest term magnitude seen at each point
inline std::pair<double, int> rect_float_defect(EvalBank<CD>& bank,
                                                const std::vector<RectTerm>& terms,
                                                int points) {
  std::vector<std::vector<std::vector<std::vector<DetEntry>>>> pre;
  for (const RectTerm& t : terms) {
    std::vector<std::vector<std::vector<DetEntry>>> fac;
    for (const RectFactor& f : t.factors) fac.push_back(rect_entries(f.a, f.m, f.shift));
    pre.push_back(std::move(fac));
  }
  double worst = 0.0;
  int taken = 0;
  for (long n = 0; taken < points && n < 4 * points + 8; ++n) {
    const PointEval<CD>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;
    }
    CD sum = 0.0;
    double big = 1.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CD prod = 1.0;
      for (const auto& entries : pre[i]) prod *= rect_value_at(*pe, entries);
      big = std::max(big, std::abs(prod));
      sum += (terms[i].sign > 0) ? prod : -prod;
    }
    worst = std::max(worst, std::abs(sum) / big);
    ++taken;
  }
  return {worst, taken};
}

inline Certificate rect_float_certificate(EvalBank<CD>& bank,
                                          const std::vector<RectTerm>& terms,
                                          std::string name, double tol, int points) {
  auto [worst, taken] = rect_float_defect(bank, terms, points);
  Certificate cert;
  cert.name = std::move(name);
  cert.method = "float";
  cert.samples = taken;
  cert.pass = taken == points && worst <= tol;
  std::ostringstream os;
  os << "max relative defect " << std::scientific << std::setprecision(3) << worst
     << " over " << taken << " points";
  cert.detail = os.str();
  return cert;
}

}  // namespace detail

// a floating-data bank wide enough for every relation up to (a_max, m_max)
inline EvalBank<CD> relation_bank(const BetheData<CD>& d, int a_max, int m_max) {
  const int span = m_max + 2;
  return EvalBank<CD>(d, -span, span, a_max + m_max);
}

inline Certificate hirota_float_check(EvalBank<CD>& bank, int a, int m, double tol,
                                      int points = 6) {
  if (a < 1 || m < 1) throw std::invalid_argument("relation needs a, m >= 1");
  std::ostringstream nm;
  nm << "hirota a=" << a << " m=" << m << " grading " << bank.data().g.signs();
  const std::vector<detail::RectTerm> terms = {
      {+1, {{a, m, -1}, {a, m, +1}}},
      {-1, {{a, m + 1, 0}, {a, m - 1, 0}}},
      {-1, {{a - 1, m, 0}, {a + 1, m, 0}}},
  };
  return detail::rect_float_certificate(bank, terms, nm.str(), tol, points);
}

namespace detail {

// determinant with a cancellation scale: the achieved value over the product
// of row maxima tells how completely a structurally zero determinant cancels
inline std::pair<double, double> det_cancellation(const PointEval<CD>& pe,
                                                  const std::vector<std::vector<DetEntry>>& entries) {
  const std::size_t n = entries.size();
  std::vector<std::vector<CD>> m(n, std::vector<CD>(n));
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = pe.upper_t_at(entries[i][j].index, static_cast<int>(entries[i][j].shift));
      row = std::max(row, std::abs(m[i][j]));
    }
    scale *= std::max(row, 1e-300);
  }
  // partial-pivot elimination; Bareiss would divide by vanishing minors here
  CD det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (std::abs(m[piv][k]) == 0.0) return {0.0, scale};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const CD f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return {std::abs(det), scale};
}

}  // namespace detail

inline Certificate vanishing_float_check(EvalBank<CD>& bank, int r, int s, double tol,
                                         int points = 6) {
  const Grading& g = bank.data().g;
  if (r != g.r() || s != g.s())
    throw std::invalid_argument("rank parameters disagree with the grading");
  Certificate cert;
  cert.name = "vanishing-block grading " + g.signs();
  cert.method = "float";
  cert.pass = true;
  double worst = 0.0;
  int taken = 0;
  std::vector<std::vector<std::vector<DetEntry>>> block;
  for (int a = r + 2; a <= r + 3; ++a)
    for (int m = s + 2; m <= s + 3; ++m)
      block.push_back(detail::rect_entries(a, m, 0));
  for (long n = 0; taken < points && n < 4 * points + 8; ++n) {
    const PointEval<CD>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;
    }
    for (const auto& entries : block) {
      const auto [value, scale] = detail::det_cancellation(*pe, entries);
      worst = std::max(worst, value / scale);
    }
    ++taken;
  }
  cert.samples = taken;
  cert.pass = taken == points && worst <= tol;
  std::ostringstream os;
  os << "max block magnitude " << std::scientific << std::setprecision(3) << worst
     << " relative to its own entry scale, " << taken << " points";
  cert.detail = os.str();
  return cert;
}

inline Certificate restricted_float_check(EvalBank<CD>& bank, int r, int s, double tol,
                                          int points = 6) {
  const Grading& g = bank.data().g;
  if (r != g.r() || s != g.s())
    throw std::invalid_argument("rank parameters disagree with the grading");
  Certificate cert;
  cert.name = "restricted-relations grading " + g.signs();
  cert.method = "float";
  cert.pass = true;
  double worst = 0.0;
  long samples = 0;
  auto run = [&](int a, int m, bool drop_a_direction) {
    std::vector<detail::RectTerm> terms = {{+1, {{a, m, -1}, {a, m, +1}}}};
    if (drop_a_direction)
      terms.push_back({-1, {{a, m + 1, 0}, {a, m - 1, 0}}});
    else
      terms.push_back({-1, {{a - 1, m, 0}, {a + 1, m, 0}}});
    auto [defect, taken] = detail::rect_float_defect(bank, terms, points);
    worst = std::max(worst, defect);
    samples += taken;
    if (taken != points) cert.pass = false;
  };
  for (int m = s + 2; m <= s + 3; ++m) run(r + 1, m, true);
  for (int a = r + 2; a <= r + 3; ++a) run(a, s + 1, false);
  cert.samples = samples;
  if (worst > tol) cert.pass = false;
  std::ostringstream os;
  os << "max relative defect " << std::scientific << std::setprecision(3) << worst
     << " over both truncation lines";
  cert.detail = os.str();
  return cert;
}

}  // namespace slbethe
