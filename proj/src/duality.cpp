#include "slbethe/duality.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slbethe/bae.hpp"

namespace slbethe {

std::vector<CD> poly_roots(const Poly<CD>& p) {
  const int n = p.degree();
  if (n < 0) throw std::domain_error("root finding needs a nonzero polynomial");
  if (n == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const CD lead = p.coeff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)) / lead;
    if (i + 1 < n) companion(i + 1, i) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<CD> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](const CD& a, const CD& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

DualityResult particle_hole(const BetheData<CD>& d, int b, double match_tol) {
  const Poly<CD> f = f_poly(d, b);
  if (f.degree() < 0)
    throw std::domain_error("transformation undefined: f vanishes identically");
  std::vector<CD> froots = poly_roots(f);
  const std::vector<CD>& old_roots = d.roots[static_cast<std::size_t>(b - 1)];

  bool match_failed = false, ambiguous = false;
  std::vector<bool> taken(froots.size(), false);
  std::vector<CD> matched;
  for (const CD& u : old_roots) {
    int best = -1, close = 0;
    double best_dist = match_tol;
    for (std::size_t i = 0; i < froots.size(); ++i) {
      if (taken[i]) continue;
      const double dist = std::abs(froots[i] - u);
      if (dist < match_tol) ++close;
      if (dist < best_dist) {
        best_dist = dist;
        best = static_cast<int>(i);
      }
    }
    if (close > 1) ambiguous = true;
    if (best < 0) {
      match_failed = true;
      continue;
    }
    taken[static_cast<std::size_t>(best)] = true;
    matched.push_back(froots[static_cast<std::size_t>(best)]);
  }
  std::vector<CD> dual;
  for (std::size_t i = 0; i < froots.size(); ++i)
    if (!taken[i]) dual.push_back(froots[i]);

  const Grading new_g = d.g.odd_reflection(b);
  std::vector<std::vector<CD>> new_roots = d.roots;
  new_roots[static_cast<std::size_t>(b - 1)] = dual;
  return DualityResult{b,
                       f,
                       std::move(matched),
                       dual,
                       new_g,
                       BetheData<CD>(new_g, std::move(new_roots), d.inhom),
                       match_failed,
                       ambiguous};
}

DualReport verify_dual_bae(const DualityResult& res, const BetheData<CD>& original) {
  const BetheData<CD>& t = res.transformed;
  if (original.g.odd_reflection(res.b) != t.g)
    throw std::invalid_argument("result does not belong to this original system");
  std::vector<int> counts;
  for (int a = 1; a <= t.g.colors(); ++a) counts.push_back(t.count(a));
  const BAESystem sys(t.g, counts, t.inhom);
  const BAEDefect defect = bae_residual(sys, t.roots);
  DualReport rep;
  rep.collision = defect.collision;
  for (int a = 1; a <= t.g.colors(); ++a)
    for (const CD& v : defect.defects[static_cast<std::size_t>(a - 1)]) {
      rep.max_defect = std::max(rep.max_defect, std::abs(v));
      if (std::abs(a - res.b) <= 1)
        rep.max_neighbor_defect = std::max(rep.max_neighbor_defect, std::abs(v));
    }
  return rep;
}

PathResult grading_path_transform(const BetheData<CD>& d,
                                  const std::vector<int>& path,
                                  double match_tol) {
  PathResult out{d, {}, true};
  for (int b : path) {
    DualityResult step = particle_hole(out.final_data, b, match_tol);
    DualReport ver = verify_dual_bae(step, out.final_data);
    if (step.match_failed) out.ok = false;
    out.final_data = step.transformed;
    out.steps.push_back(PathStep{std::move(step), ver});
  }
  return out;
}

}  // namespace slbethe
