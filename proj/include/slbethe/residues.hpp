#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slbethe/bethe_data.hpp"
#include "slbethe/shapes.hpp"

namespace slbethe {

// Floating-point residue analysis of transfer-function summands. Everything
// here works on factored linear forms, so a residue is computed by removing
// the one vanishing denominator factor and evaluating the cofactor, never by
// differentiating anything numerically.

struct ResidueReport {
  double max_residue = 0.0;  // largest |residue sum| over candidate poles
  int candidates = 0;        // pole locations examined
  bool degenerate = false;   // some summand had a multiple pole there
  bool overlapping = false;  // one location served roots of distinct colors
};

// residue of p_b z(b;u) + p_{b+1} z(b+1;u) at u = -S_b + u_k^{(b)}, maximized
// over k; vanishing on-shell is the analytic content of the Bethe equations
ResidueReport pair_residue_check(const BetheData<CD>& d, int b,
                                 double vanish_tol = 1e-8);

// residues of the full tableau sum for the shape at every pole any summand
// exhibits; on-shell data must make every sum vanish
ResidueReport pole_freeness_check(const BetheData<CD>& d, const SkewShape& sh,
                                  double vanish_tol = 1e-8,
                                  std::size_t max_cells = 24);

// single-column convenience used by the eigenvalue checks
ResidueReport pole_freeness_check_column(const BetheData<CD>& d, int a,
                                         double vanish_tol = 1e-8);

// the pairing of summands that cancel each other's color-b poles
struct CancellationEdge {
  std::size_t from, to;  // summand indices; `from` carries letter b, `to` b+1
  int color;
  long shift;  // the shared pole sits at u_k^{(color)} + shift
};

struct CancellationReport {
  std::vector<Tableau> terms;
  std::vector<CancellationEdge> edges;
  double max_pair_residue = 0.0;  // worst |res(from) + res(to)| over edges
  bool degenerate = false;
  std::string dot;  // graph with (color, shift) edge labels
};

CancellationReport cancellation_pairs(const BetheData<CD>& d, const SkewShape& sh,
                                      int b, double vanish_tol = 1e-8,
                                      std::size_t max_cells = 24);

}  // namespace slbethe
