#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slbethe/bethe_data.hpp"
#include "slbethe/grading.hpp"
#include "slbethe/scalars.hpp"

namespace slbethe {

// Bethe equations for a spin chain: one equation per root u_k^{(a)},
//
//   lhs_a(u) = (-1)^{deg alpha_a} prod_b Q_b(u + (alpha_a|alpha_b))
//                                        / Q_b(u - (alpha_a|alpha_b))
//
// where lhs_1(u) = -P(u + p_1)/P(u - p_1) carries the vacuum polynomial and
// lhs_a = -1 for a > 1. Factors with (alpha_a|alpha_b) = 0 drop out. All
// residuals below use the cleared-denominator polynomial form
//
//   G = -lhs_num * prod_b Q_b(u - c_b) - sign * lhs_den * prod_b Q_b(u + c_b)
//
// which stays finite at root collisions and is what the solver drives to 0.
struct BAESystem {
  Grading g;
  std::vector<int> counts;  // roots per color
  std::vector<CD> inhom;    // chain inhomogeneities, one per site

  BAESystem(Grading grading, std::vector<int> n, std::vector<CD> w);

  int sites() const { return static_cast<int>(inhom.size()); }
  int total_roots() const;
};

struct BAESolution {
  std::vector<std::vector<CD>> roots;  // per color, sorted lexicographically
  double residual = 0.0;               // max cleared defect over equations
  bool collision = false;              // nearly equal roots inside a color
};

struct BAEDefect {
  std::vector<std::vector<CD>> defects;  // aligned with the root lists
  bool collision = false;                // an equation degenerated to 0 = 0
  double max_abs() const;
};

BAEDefect bae_residual(const BAESystem& sys,
                       const std::vector<std::vector<CD>>& roots);

struct SolveConfig {
  int max_seeds = 64;
  int max_iter = 200;
  int max_halvings = 30;
  double tol = 1e-10;
  double dedup_tol = 1e-6;
  double box = 3.0;        // seeds fill [-box, box]^2 per root
  unsigned seed_offset = 0;
  int root_cap = 8;
};

struct SolveInfo {
  int seeds_tried = 0;
  int converged = 0;
  int rank_deficient = 0;  // seeds whose final Jacobian lost full rank
};

// damped Newton from deterministic low-discrepancy seeds; returns distinct
// converged solutions ordered by their sorted root vectors
std::vector<BAESolution> solve(const BAESystem& sys, const SolveConfig& cfg = {},
                               SolveInfo* info = nullptr);

// packages a root assignment with the system data for transfer-function work
BetheData<CD> to_bethe_data(const BAESystem& sys,
                            const std::vector<std::vector<CD>>& roots);

}  // namespace slbethe
