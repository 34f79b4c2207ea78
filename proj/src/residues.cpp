#include "slbethe/residues.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slbethe {

namespace {

// product of linear factors (u - loc) over a constant, tagged with the color
// that produced each denominator factor (0 for vacuum factors)
struct FactoredRat {
  CD constant{1.0, 0.0};
  std::vector<CD> num_locs;
  std::vector<CD> den_locs;
  std::vector<int> den_colors;
};

void mul_q_num(FactoredRat& f, const BetheData<CD>& d, int b, double t) {
  if (b <= 0 || b >= d.g.size()) return;  // boundary Q is the constant 1
  for (const CD& r : d.roots[static_cast<std::size_t>(b - 1)])
    f.num_locs.push_back(r - t);
}

void mul_q_den(FactoredRat& f, const BetheData<CD>& d, int b, double t) {
  if (b <= 0 || b >= d.g.size()) return;
  for (const CD& r : d.roots[static_cast<std::size_t>(b - 1)]) {
    f.den_locs.push_back(r - t);
    f.den_colors.push_back(b);
  }
}

void mul_vacuum(FactoredRat& f, const BetheData<CD>& d, double t) {
  for (const CD& w : d.inhom) f.num_locs.push_back(w - t);
}

// one box factor z(a; u + c) in fully factored form
FactoredRat factored_z(const BetheData<CD>& d, int a, long c) {
  const Grading& g = d.g;
  const double pa = static_cast<double>(g.p(a));
  const double sp = static_cast<double>(g.prefix_sum(a - 1));
  const double so = static_cast<double>(g.prefix_sum(a));
  const double cc = static_cast<double>(c);
  FactoredRat f;
  mul_vacuum(f, d, cc + (a == 1 ? 2.0 * pa : 0.0));
  mul_q_num(f, d, a - 1, cc + sp + 2.0 * pa);
  mul_q_num(f, d, a, cc + so - 2.0 * pa);
  mul_q_den(f, d, a - 1, cc + sp);
  mul_q_den(f, d, a, cc + so);
  return f;
}

FactoredRat factored_product(FactoredRat a, const FactoredRat& b) {
  a.constant *= b.constant;
  a.num_locs.insert(a.num_locs.end(), b.num_locs.begin(), b.num_locs.end());
  a.den_locs.insert(a.den_locs.end(), b.den_locs.begin(), b.den_locs.end());
  a.den_colors.insert(a.den_colors.end(), b.den_colors.begin(), b.den_colors.end());
  return a;
}

FactoredRat factored_term(const BetheData<CD>& d, const Tableau& t) {
  FactoredRat acc;
  const auto cs = t.shape().cells();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto [i, j] = cs[k];
    const int b = t.flat()[k];
    FactoredRat zf = factored_z(d, b, t.shape().cell_shift(i, j));
    if (d.g.p(b) == -1) zf.constant = -zf.constant;
    acc = factored_product(std::move(acc), zf);
  }
  return acc;
}

struct TermResidue {
  CD value{0.0, 0.0};
  int vanishing = 0;  // simultaneously vanishing denominator factors
};

// residue at u0 with the remove-vanishing-factor rule; a clean simple pole
// has exactly one denominator factor within tolerance of u0
TermResidue residue_at(const FactoredRat& f, const CD& u0, double tol) {
  const double scale = tol * std::max(1.0, std::abs(u0));
  TermResidue out;
  CD value = f.constant;
  for (const CD& n : f.num_locs) value *= (u0 - n);
  for (const CD& loc : f.den_locs) {
    if (std::abs(u0 - loc) < scale) {
      ++out.vanishing;
      continue;
    }
    value /= (u0 - loc);
  }
  if (out.vanishing == 1) out.value = value;
  return out;
}

}  // namespace

ResidueReport pair_residue_check(const BetheData<CD>& d, int b, double vanish_tol) {
  const Grading& g = d.g;
  if (b < 1 || b > g.colors()) throw std::out_of_range("color index");
  ResidueReport rep;
  const double sb = static_cast<double>(g.prefix_sum(b));
  const FactoredRat zb = factored_z(d, b, 0);
  const FactoredRat zb1 = factored_z(d, b + 1, 0);
  const double pb = static_cast<double>(g.p(b));
  const double pb1 = static_cast<double>(g.p(b + 1));
  for (const CD& root : d.roots[static_cast<std::size_t>(b - 1)]) {
    const CD u0 = root - sb;
    const TermResidue ra = residue_at(zb, u0, vanish_tol);
    const TermResidue rb = residue_at(zb1, u0, vanish_tol);
    if (ra.vanishing > 1 || rb.vanishing > 1) {
      rep.degenerate = true;
      continue;
    }
    ++rep.candidates;
    rep.max_residue =
        std::max(rep.max_residue, std::abs(pb * ra.value + pb1 * rb.value));
  }
  return rep;
}

namespace {

ResidueReport sum_residues(const BetheData<CD>& d,
                           const std::vector<Tableau>& terms, double vanish_tol) {
  ResidueReport rep;
  std::vector<FactoredRat> factored;
  factored.reserve(terms.size());
  for (const Tableau& t : terms) factored.push_back(factored_term(d, t));

  // candidate poles: every denominator location of every summand, clustered
  std::vector<std::pair<CD, int>> locs;  // location, color
  for (const FactoredRat& f : factored)
    for (std::size_t i = 0; i < f.den_locs.size(); ++i)
      locs.push_back({f.den_locs[i], f.den_colors[i]});
  std::vector<bool> used(locs.size(), false);
  for (std::size_t i = 0; i < locs.size(); ++i) {
    if (used[i]) continue;
    const CD u0 = locs[i].first;
    const double scale = vanish_tol * std::max(1.0, std::abs(u0));
    bool colors_differ = false;
    for (std::size_t j = i; j < locs.size(); ++j) {
      if (used[j] || std::abs(locs[j].first - u0) >= scale) continue;
      used[j] = true;
      if (locs[j].second != locs[i].second) colors_differ = true;
    }
    if (colors_differ) rep.overlapping = true;
    ++rep.candidates;
    CD total{0.0, 0.0};
    bool bad = false;
    for (const FactoredRat& f : factored) {
      const TermResidue r = residue_at(f, u0, vanish_tol);
      if (r.vanishing > 1) {
        bad = true;
        break;
      }
      total += r.value;
    }
    if (bad) {
      rep.degenerate = true;
      continue;
    }
    rep.max_residue = std::max(rep.max_residue, std::abs(total));
  }
  return rep;
}

}  // namespace

ResidueReport pole_freeness_check(const BetheData<CD>& d, const SkewShape& sh,
                                  double vanish_tol, std::size_t max_cells) {
  return sum_residues(d, enumerate_tableaux(sh, d.g, max_cells), vanish_tol);
}

ResidueReport pole_freeness_check_column(const BetheData<CD>& d, int a,
                                         double vanish_tol) {
  if (a < 1) throw std::invalid_argument("column length must be positive");
  const SkewShape col(Partition(std::vector<int>(static_cast<std::size_t>(a), 1)));
  return pole_freeness_check(d, col, vanish_tol);
}

CancellationReport cancellation_pairs(const BetheData<CD>& d, const SkewShape& sh,
                                      int b, double vanish_tol,
                                      std::size_t max_cells) {
  const Grading& g = d.g;
  if (b < 1 || b > g.colors()) throw std::out_of_range("color index");
  CancellationReport rep;
  rep.terms = enumerate_tableaux(sh, g, max_cells);
  const auto cs = sh.cells();

  // two summands pair when they agree everywhere except one cell holding b
  // in one and b+1 in the other; that cell's denominator factor is shared
  for (std::size_t t1 = 0; t1 < rep.terms.size(); ++t1)
    for (std::size_t t2 = 0; t2 < rep.terms.size(); ++t2) {
      if (t1 == t2) continue;
      int diff_cell = -1;
      bool pair = true;
      for (std::size_t k = 0; k < cs.size() && pair; ++k) {
        const int e1 = rep.terms[t1].flat()[k];
        const int e2 = rep.terms[t2].flat()[k];
        if (e1 == e2) continue;
        if (diff_cell >= 0 || e1 != b || e2 != b + 1)
          pair = false;
        else
          diff_cell = static_cast<int>(k);
      }
      if (!pair || diff_cell < 0) continue;
      const auto [i, j] = cs[static_cast<std::size_t>(diff_cell)];
      const long c = sh.cell_shift(i, j);
      rep.edges.push_back({t1, t2, b, -static_cast<long>(g.prefix_sum(b)) - c});
    }

  // on-shell the two residues at the shared pole cancel, root by root
  std::vector<FactoredRat> factored;
  for (const Tableau& t : rep.terms) factored.push_back(factored_term(d, t));
  for (const CancellationEdge& e : rep.edges)
    for (const CD& root : d.roots[static_cast<std::size_t>(b - 1)]) {
      const CD u0 = root + static_cast<double>(e.shift);
      const TermResidue r1 = residue_at(factored[e.from], u0, vanish_tol);
      const TermResidue r2 = residue_at(factored[e.to], u0, vanish_tol);
      if (r1.vanishing > 1 || r2.vanishing > 1) {
        rep.degenerate = true;
        continue;
      }
      rep.max_pair_residue =
          std::max(rep.max_pair_residue, std::abs(r1.value + r2.value));
    }

  std::ostringstream os;
  os << "digraph cancellation {\n  rankdir=LR;\n";
  for (std::size_t t = 0; t < rep.terms.size(); ++t) {
    os << "  t" << t << " [shape=box,label=\"";
    int row = 1;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].first != row) {
        os << "/";
        row = cs[k].first;
      }
      os << rep.terms[t].flat()[k];
    }
    os << "\"];\n";
  }
  for (const CancellationEdge& e : rep.edges)
    os << "  t" << e.from << " -> t" << e.to << " [label=\"(" << e.color << ","
       << e.shift << ")\"];\n";
  os << "}\n";
  rep.dot = os.str();
  return rep;
}

}  // namespace slbethe
