#pragma once

#include <vector>

#include "slbethe/bethe_data.hpp"
#include "slbethe/grading.hpp"
#include "slbethe/poly.hpp"
#include "slbethe/scalars.hpp"

namespace slbethe {

// Particle-hole transformation at a color b whose simple root is odd: the
// color-b roots are completed to the full root set of the polynomial f
// below, the complementary roots become the new color-b roots, and the
// signs (p_b, p_{b+1}) flip. Interior colors use
//
//   f(z) = Q_{b-1}(z + p_b) Q_{b+1}(z + p_{b+1})
//        - Q_{b-1}(z - p_b) Q_{b+1}(z - p_{b+1})
//
// while b = 1 replaces Q_0 by the vacuum polynomial with its own shifts and
// b = r+s+1 keeps only the Q_{r+s} pair.
template <class K>
Poly<K> f_poly(const BetheData<K>& d, int b) {
  const Grading& g = d.g;
  if (b < 1 || b > g.colors()) throw std::out_of_range("color index");
  if (!g.odd_root(b))
    throw std::invalid_argument("transformation needs an odd simple root");
  const K pb = scalar_from_int<K>(g.p(b));
  const K pb1 = scalar_from_int<K>(g.p(b + 1));
  Poly<K> plus, minus;
  if (b == 1) {
    const Poly<K> vac = d.vacuum_poly();
    const Poly<K> q2 = d.q_poly(2);
    plus = vac.shift(pb) * q2.shift(pb1);
    minus = vac.shift(field<K>::zero() - pb) * q2.shift(field<K>::zero() - pb1);
  } else if (b == g.colors()) {
    const Poly<K> q = d.q_poly(b - 1);
    plus = q.shift(pb);
    minus = q.shift(field<K>::zero() - pb);
  } else {
    const Poly<K> qm = d.q_poly(b - 1);
    const Poly<K> qp = d.q_poly(b + 1);
    plus = qm.shift(pb) * qp.shift(pb1);
    minus = qm.shift(field<K>::zero() - pb) * qp.shift(field<K>::zero() - pb1);
  }
  Poly<K> f = plus - minus;
  if constexpr (!field<K>::exact) f = f.trimmed_leading(1e-12);
  return f;
}

struct DualityResult {
  int b;
  Poly<CD> f;
  std::vector<CD> matched_roots;  // f-roots identified with the old color b
  std::vector<CD> dual_roots;     // the complementary roots, the new color b
  Grading new_grading;
  BetheData<CD> transformed;
  bool match_failed = false;  // an original root had no f-root nearby
  bool ambiguous = false;     // several f-roots competed for one original
};

// computes f, splits its roots against the current color-b roots, and
// returns the transformed system
DualityResult particle_hole(const BetheData<CD>& d, int b,
                            double match_tol = 1e-6);

struct DualReport {
  double max_neighbor_defect = 0.0;  // equations at colors b-1, b, b+1
  double max_defect = 0.0;           // all equations of the new system
  bool collision = false;
};

// the transformed data must satisfy the Bethe equations of the new grading;
// only the equations touching color b are new content, the rest carry over
DualReport verify_dual_bae(const DualityResult& res, const BetheData<CD>& original);

struct PathStep {
  DualityResult result;
  DualReport verification;
};

struct PathResult {
  BetheData<CD> final_data;
  std::vector<PathStep> steps;
  bool ok = true;  // no step reported a matching failure
};

// applies the transformation along a list of colors, each odd in the
// grading current at its step
PathResult grading_path_transform(const BetheData<CD>& d,
                                  const std::vector<int>& path,
                                  double match_tol = 1e-6);

// roots of a complex polynomial via the companion matrix
std::vector<CD> poly_roots(const Poly<CD>& p);

}  // namespace slbethe
