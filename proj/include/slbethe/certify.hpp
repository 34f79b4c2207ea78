#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slbethe/dvf.hpp"

namespace slbethe {

// outcome of one verification, carrying enough metadata to audit it
struct Certificate {
  std::string name;
  bool pass = false;
  std::string method;      // "canonical" for symbolic equality, "sampled" for
                           // evaluation at degree_bound + 1 exact points
  long degree_bound = -1;  // only meaningful for sampled certificates
  long samples = 0;
  std::string detail;
};

// shared cache of point evaluations, one per integer abscissa, so that many
// shape checks against the same Bethe data reuse the z and series tables
template <class K>
class EvalBank {
 public:
  EvalBank(BetheData<K> d, int offset_lo, int offset_hi, int max_order)
      : d_(std::move(d)), lo_(offset_lo), hi_(offset_hi), order_(max_order) {}

  // memoized point tables hold pointers into d_, so the bank must stay put
  EvalBank(const EvalBank&) = delete;
  EvalBank& operator=(const EvalBank&) = delete;

  const PointEval<K>& at(long n) {
    auto it = memo_.find(n);
    if (it == memo_.end())
      it = memo_
               .emplace(n, PointEval<K>(d_, scalar_from_int<K>(n), lo_, hi_,
                                        order_))
               .first;
    return it->second;
  }

  const BetheData<K>& data() const { return d_; }
  int offset_lo() const { return lo_; }
  int offset_hi() const { return hi_; }
  int max_order() const { return order_; }

 private:
  BetheData<K> d_;
  int lo_, hi_, order_;
  std::map<long, PointEval<K>> memo_;
};

// offset window and series order a single shape's identity check needs
struct IdentityWindow {
  int lo = 0;
  int hi = 0;
  int order = 1;
};

inline IdentityWindow identity_window(const SkewShape& sh) {
  IdentityWindow w;
  bool seen = false;
  auto grow = [&](long t) {
    if (!seen) {
      w.lo = w.hi = static_cast<int>(t);
      seen = true;
    } else {
      w.lo = std::min(w.lo, static_cast<int>(t));
      w.hi = std::max(w.hi, static_cast<int>(t));
    }
  };
  for (auto [i, j] : sh.cells()) grow(sh.cell_shift(i, j));
  for (const auto& rows : {column_det_entries(sh), row_det_entries(sh)})
    for (const auto& row : rows)
      for (const DetEntry& e : row) {
        grow(e.shift);
        w.order = std::max(w.order, e.index);
      }
  if (!seen) w.lo = w.hi = 0;
  return w;
}

namespace detail {

// denominator bookkeeping key: the factor Q_b(u + offset)
using DenKey = std::pair<int, long>;

// families of Q factors a single column function T^a(u + t) can put in a
// denominator; each key appears at most once per summand
inline std::set<DenKey> column_den_keys(const Grading& g, int a, long t) {
  std::set<DenKey> keys;
  const int colors = g.size() - 1;
  for (int rho = 1; rho <= a; ++rho) {
    const long c = t + a + 1 - 2L * rho;
    for (int b = 1; b <= colors; ++b) keys.insert({b, c + g.prefix_sum(b)});
  }
  return keys;
}

// same reasoning for a row function T_m(u + t): cell arguments are again m
// consecutive even-spaced shifts, one z factor each
inline std::set<DenKey> row_den_keys(const Grading& g, int m, long t) {
  return column_den_keys(g, m, t);
}

using DenKeyMap = std::map<DenKey, long>;

// common denominator needed for the tableau sum, computed from the actual
// summands: per summand multiplicities, then a per-key maximum
template <class K>
DenKeyMap tableau_den_key_map(const BetheData<K>& d, const std::vector<Tableau>& ts) {
  const Grading& g = d.g;
  const int colors = g.size() - 1;
  DenKeyMap family;
  for (const Tableau& t : ts) {
    DenKeyMap term;
    const auto cs = t.shape().cells();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const auto [i, j] = cs[k];
      const int b = t.flat()[k];
      const long c = t.shape().cell_shift(i, j);
      if (b - 1 >= 1) ++term[{b - 1, c + g.prefix_sum(b - 1)}];
      if (b <= colors) ++term[{b, c + g.prefix_sum(b)}];
    }
    for (const auto& [key, mult] : term)
      family[key] = std::max(family[key], mult);
  }
  return family;
}

inline DenKeyMap key_map_sum(const DenKeyMap& a, const DenKeyMap& b) {
  DenKeyMap out = a;
  for (const auto& [key, mult] : b) out[key] += mult;
  return out;
}

inline DenKeyMap key_map_max(const DenKeyMap& a, const DenKeyMap& b) {
  DenKeyMap out = a;
  for (const auto& [key, mult] : b) {
    auto [it, fresh] = out.emplace(key, mult);
    if (!fresh) it->second = std::max(it->second, mult);
  }
  return out;
}

template <class K>
long den_degree(const BetheData<K>& d, const DenKeyMap& m) {
  long deg = 0;
  for (const auto& [key, mult] : m)
    deg += mult * static_cast<long>(d.count(key.first));
  return deg;
}

// per-Q-factor worst multiplicity over all permutation terms of a
// determinant of column or row functions
inline DenKeyMap det_den_key_map(const Grading& g,
                                 const std::vector<std::vector<DetEntry>>& entries,
                                 bool rows) {
  const std::size_t n = entries.size();
  DenKeyMap worst;
  if (n == 0) return worst;
  std::vector<std::vector<std::set<DenKey>>> wins(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const DetEntry& e = entries[i][j];
      std::set<DenKey> keys;
      if (e.index > 0)
        keys = rows ? row_den_keys(g, e.index, e.shift)
                    : column_den_keys(g, e.index, e.shift);
      wins[i].push_back(std::move(keys));
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    DenKeyMap cur;
    for (std::size_t i = 0; i < n; ++i)
      for (const DenKey& key : wins[i][perm[i]]) ++cur[key];
    worst = key_map_max(worst, cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return worst;
}

template <class K>
K det_value_at(const PointEval<K>& pe,
               const std::vector<std::vector<DetEntry>>& entries, bool rows) {
  const std::size_t n = entries.size();
  std::vector<std::vector<K>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const DetEntry& e : entries[i])
      m[i].push_back(rows ? pe.lower_t_at(e.index, static_cast<int>(e.shift))
                          : pe.upper_t_at(e.index, static_cast<int>(e.shift)));
  return scalar_det(std::move(m));
}

template <class K>
K tableau_sum_at(const PointEval<K>& pe, const Grading& g,
                 const std::vector<Tableau>& ts) {
  if (ts.empty()) return field<K>::zero();
  const auto cs = ts.front().shape().cells();
  const std::size_t n = cs.size();
  std::vector<int> shift(n);
  for (std::size_t k = 0; k < n; ++k)
    shift[k] = ts.front().shape().cell_shift(cs[k].first, cs[k].second);
  // fillings arrive in lexicographic order, so consecutive ones share a
  // prefix; keeping running products avoids redoing those multiplications
  std::vector<K> pref(n + 1, field<K>::one());
  const std::vector<int>* prev = nullptr;
  K acc = field<K>::zero();
  for (const Tableau& t : ts) {
    const std::vector<int>& f = t.flat();
    std::size_t k = 0;
    if (prev)
      while (k < n && (*prev)[k] == f[k]) ++k;
    for (; k < n; ++k) {
      pref[k + 1] = pref[k] * pe.z_at(f[k], shift[k]);
      if (g.p(f[k]) == -1) pref[k + 1] = field<K>::zero() - pref[k + 1];
    }
    acc = acc + pref[n];
    prev = &f;
  }
  return acc;
}

}  // namespace detail

// Both determinant representations against the tableau sum, certified by
// evaluation at more exact points than the degree of any polynomial that
// could separate them. A rational identity whose cleared numerator has
// degree at most D and vanishes at D + 1 points holds everywhere.
template <class K>
Certificate certify_det_identities_sampled(const SkewShape& sh, EvalBank<K>& bank,
                                           std::size_t max_cells = 24) {
  static_assert(field<K>::exact, "sampled certificates require exact arithmetic");
  const BetheData<K>& d = bank.data();
  Certificate cert;
  {
    std::ostringstream nm;
    nm << "det-identities " << sh.to_string() << " grading " << d.g.signs();
    cert.name = nm.str();
  }
  cert.method = "sampled";

  const auto ts = enumerate_tableaux(sh, d.g, max_cells);
  const auto col_entries = column_det_entries(sh);
  const auto row_entries = row_det_entries(sh);
  const long nsites = static_cast<long>(d.sites());
  const long cells = static_cast<long>(sh.cell_count());
  // every representation of the same rational function here has numerator
  // degree exceeding its denominator degree by exactly nsites * cells, so a
  // difference cleared over the per-factor worst-case common denominator has
  // numerator degree at most nsites * cells plus that denominator's degree
  const detail::DenKeyMap cleared = detail::key_map_max(
      detail::tableau_den_key_map(d, ts),
      detail::key_map_max(detail::det_den_key_map(d.g, col_entries, false),
                          detail::det_den_key_map(d.g, row_entries, true)));
  cert.degree_bound = nsites * cells + detail::den_degree(d, cleared);
  const long want = cert.degree_bound + 1;

  long taken = 0;
  long n = 0;
  const long attempt_cap = want + 64;
  for (long tries = 0; taken < want && tries < attempt_cap; ++tries, ++n) {
    const PointEval<K>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;  // abscissa collides with a shifted root, take the next one
    }
    const K lhs = detail::tableau_sum_at(*pe, d.g, ts);
    const K col = detail::det_value_at(*pe, col_entries, false);
    const K row = detail::det_value_at(*pe, row_entries, true);
    if (!field<K>::is_zero(lhs - col) || !field<K>::is_zero(lhs - row)) {
      std::ostringstream os;
      os << "mismatch at u = " << n << " (tableaux vs "
         << (field<K>::is_zero(lhs - col) ? "row" : "column") << " det)";
      cert.detail = os.str();
      cert.samples = taken + 1;
      cert.pass = false;
      return cert;
    }
    ++taken;
  }
  cert.samples = taken;
  if (taken < want) {
    cert.detail = "could not collect enough pole-free sample points";
    cert.pass = false;
    return cert;
  }
  {
    std::ostringstream os;
    os << ts.size() << " summands, " << taken << " agreeing points";
    cert.detail = os.str();
    cert.pass = true;
  }
  return cert;
}

// floating-lane spot check of the same three-way identity: relative defects
// at integer abscissae instead of an exact proof
inline Certificate det_identities_float_check(const SkewShape& sh, EvalBank<CD>& bank,
                                              double tol, int points = 8,
                                              std::size_t max_cells = 24) {
  const BetheData<CD>& d = bank.data();
  Certificate cert;
  {
    std::ostringstream nm;
    nm << "det-identities " << sh.to_string() << " grading " << d.g.signs();
    cert.name = nm.str();
  }
  cert.method = "float";
  const auto ts = enumerate_tableaux(sh, d.g, max_cells);
  const auto col_entries = column_det_entries(sh);
  const auto row_entries = row_det_entries(sh);
  double worst = 0.0;
  int taken = 0;
  for (long n = 0; taken < points && n < 4 * points + 8; ++n) {
    const PointEval<CD>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;
    }
    const CD lhs = detail::tableau_sum_at(*pe, d.g, ts);
    const CD col = detail::det_value_at(*pe, col_entries, false);
    const CD row = detail::det_value_at(*pe, row_entries, true);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(col), std::abs(row)});
    worst = std::max(worst,
                     std::max(std::abs(lhs - col), std::abs(lhs - row)) / scale);
    ++taken;
  }
  cert.samples = taken;
  cert.pass = taken == points && worst <= tol;
  std::ostringstream os;
  os << "max relative defect " << std::scientific << std::setprecision(3) << worst
     << " over " << taken << " points";
  cert.detail = os.str();
  return cert;
}

// same statement proved by canonical forms instead of sampling; only viable
// for small shapes since the symbolic determinants grow quickly
template <class K>
Certificate certify_det_identities_canonical(const BetheData<K>& d,
                                             const SkewShape& sh,
                                             std::size_t max_cells = 24) {
  static_assert(field<K>::exact, "canonical comparison requires exact arithmetic");
  Certificate cert;
  {
    std::ostringstream nm;
    nm << "det-identities " << sh.to_string() << " grading " << d.g.signs();
    cert.name = nm.str();
  }
  cert.method = "canonical";
  const RatFun<K> lhs = transfer_tableau_sum(d, sh, max_cells);
  const RatFun<K> col = jacobi_trudi_det(d, sh);
  const RatFun<K> row = giambelli_dual_det(d, sh);
  const bool ok_col = (lhs == col);
  const bool ok_row = (lhs == row);
  cert.pass = ok_col && ok_row;
  cert.detail = cert.pass ? "canonical forms agree"
                          : (ok_col ? "row determinant differs"
                                    : "column determinant differs");
  return cert;
}

// series coefficients against direct single-column and single-row tableau
// sums, by canonical forms
template <class K>
Certificate certify_series_tableaux_match(const BetheData<K>& d, int max_index) {
  static_assert(field<K>::exact, "canonical comparison requires exact arithmetic");
  Certificate cert;
  cert.name = "series-vs-tableaux grading " + d.g.signs();
  cert.method = "canonical";
  const OperatorSeries<K> up = upper_series(d, max_index);
  const OperatorSeries<K> low = lower_series(d, max_index);
  for (int a = 1; a <= max_index; ++a) {
    const SkewShape col(Partition(std::vector<int>(static_cast<std::size_t>(a), 1)));
    const SkewShape row(Partition({a}));
    if (!(upper_t(up, a) == transfer_tableau_sum(d, col))) {
      cert.pass = false;
      cert.detail = "column series coefficient " + std::to_string(a) + " differs";
      return cert;
    }
    if (!(lower_t(low, a) == transfer_tableau_sum(d, row))) {
      cert.pass = false;
      cert.detail = "row series coefficient " + std::to_string(a) + " differs";
      return cert;
    }
  }
  cert.pass = true;
  cert.detail = "coefficients 1.." + std::to_string(max_index) + " match";
  return cert;
}

// the two generating series are two-sided inverses once X is negated in one
template <class K>
Certificate certify_series_inverse(const BetheData<K>& d, int order) {
  static_assert(field<K>::exact, "canonical comparison requires exact arithmetic");
  Certificate cert;
  cert.name = "series-inverse grading " + d.g.signs();
  cert.method = "canonical";
  const OperatorSeries<K> up = upper_series(d, order);
  const OperatorSeries<K> low = series_negate_x(lower_series(d, order));
  const OperatorSeries<K> idl = series_mul(up, low, order);
  const OperatorSeries<K> idr = series_mul(low, up, order);
  const OperatorSeries<K> one = series_one<K>(order);
  auto same = [&](const OperatorSeries<K>& s) {
    for (int k = 0; k <= order; ++k)
      if (!(s.c[static_cast<std::size_t>(k)] == one.c[static_cast<std::size_t>(k)]))
        return false;
    return true;
  };
  cert.pass = same(idl) && same(idr);
  cert.detail = cert.pass ? "both products collapse to 1 through order " +
                                std::to_string(order)
                          : "product keeps a nonzero tail";
  return cert;
}

// floating mirror of the coefficient statement, read off point tables:
// T^a(x) against the column sum and T_m(x) against the row sum
inline Certificate series_tableaux_float_check(EvalBank<CD>& bank, int max_index,
                                               double tol, int points = 6) {
  const BetheData<CD>& d = bank.data();
  Certificate cert;
  cert.name = "series-vs-tableaux grading " + d.g.signs();
  cert.method = "float";
  std::vector<std::vector<Tableau>> cols, rows;
  for (int a = 1; a <= max_index; ++a) {
    cols.push_back(enumerate_tableaux(
        SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(a), 1))), d.g));
    rows.push_back(enumerate_tableaux(SkewShape(Partition({a})), d.g));
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
    for (int a = 1; a <= max_index; ++a) {
      const CD cs = detail::tableau_sum_at(*pe, d.g, cols[static_cast<std::size_t>(a - 1)]);
      const CD cv = pe->upper_t_at(a, 0);
      const CD rs = detail::tableau_sum_at(*pe, d.g, rows[static_cast<std::size_t>(a - 1)]);
      const CD rv = pe->lower_t_at(a, 0);
      worst = std::max(worst, std::abs(cs - cv) / std::max({1.0, std::abs(cs), std::abs(cv)}));
      worst = std::max(worst, std::abs(rs - rv) / std::max({1.0, std::abs(rs), std::abs(rv)}));
    }
    ++taken;
  }
  cert.samples = taken;
  cert.pass = taken == points && worst <= tol;
  std::ostringstream os;
  os << "max relative defect " << std::scientific << std::setprecision(3) << worst
     << " for indices 1.." << max_index;
  cert.detail = os.str();
  return cert;
}

// floating mirror of the inverse statement: both exchange-rule convolutions
// of the series with the X-negated other one collapse to 1
inline Certificate series_inverse_float_check(EvalBank<CD>& bank, int order,
                                              double tol, int points = 6) {
  Certificate cert;
  cert.name = "series-inverse grading " + bank.data().g.signs();
  cert.method = "float";
  double worst = 0.0;
  int taken = 0;
  for (long n = 0; taken < points && n < 4 * points + 8; ++n) {
    const PointEval<CD>* pe = nullptr;
    try {
      pe = &bank.at(n);
    } catch (const std::domain_error&) {
      continue;
    }
    for (int k = 0; k <= order; ++k) {
      CD ul = 0.0, lu = 0.0;
      double big = 1.0;
      for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        const double sj = (j % 2 == 0) ? 1.0 : -1.0;  // X-negation of the lower factor
        // coefficient values c_a(x + q) read back through c_a(v) = T(v + a - 1)
        const CD a1 = pe->upper_t_at(i, i - 1);
        const CD b1 = pe->lower_t_at(j, 2 * i + j - 1);
        const CD b2 = pe->lower_t_at(j, j - 1);
        const CD a2 = pe->upper_t_at(i, 2 * j + i - 1);
        ul += a1 * (sj * b1);
        lu += (sj * b2) * a2;
        big = std::max({big, std::abs(a1 * b1), std::abs(a2 * b2)});
      }
      const CD want = (k == 0) ? CD(1.0) : CD(0.0);
      worst = std::max({worst, std::abs(ul - want) / big, std::abs(lu - want) / big});
    }
    ++taken;
  }
  cert.samples = taken;
  cert.pass = taken == points && worst <= tol;
  std::ostringstream os;
  os << "max relative defect " << std::scientific << std::setprecision(3) << worst
     << " through order " << order;
  cert.detail = os.str();
  return cert;
}

// u-independent specialization: tableau character against the classical
// determinant of elementary characters
template <class K>
Certificate certify_character_match(const Grading& g, const SkewShape& sh,
                                    const std::vector<K>& x,
                                    std::size_t max_cells = 24) {
  Certificate cert;
  cert.name = "character " + sh.to_string() + " grading " + g.signs();
  cert.method = "canonical";
  const K lhs = character_value(g, sh, x, max_cells);
  const K rhs = character_det(g, sh, x);
  cert.pass = field<K>::is_zero(lhs - rhs);
  cert.detail = cert.pass ? "tableau character equals determinant"
                          : "character values differ";
  return cert;
}

}  // namespace slbethe
