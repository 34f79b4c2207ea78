#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "slbethe/bae.hpp"
#include "slbethe/residues.hpp"
#include "slbethe/shapes.hpp"

using namespace slbethe;

TEST_CASE("system bookkeeping") {
  Grading g = grading_from_signs(1, 0, "++-");
  BAESystem sys(g, {2, 1}, {CD(0, 0), CD(0.5, 0)});
  CHECK(sys.sites() == 2);
  CHECK(sys.total_roots() == 3);
  CHECK_THROWS(BAESystem(g, {2}, {CD(0, 0)}));        // one count per color
  CHECK_THROWS(BAESystem(g, {2, -1}, {CD(0, 0)}));    // negative count
}

TEST_CASE("cleared defects vanish exactly on a hand-checked configuration") {
  // the even two-letter chain with two sites at 0 and a single root: the
  // equation (w1 - v + 1)(w2 - v + 1) = (w1 - v - 1)(w2 - v - 1) forces v = 0
  Grading sl2(1, -1, {1, 1});
  BAESystem sys(sl2, {1}, {CD(0, 0), CD(0, 0)});
  auto defect = bae_residual(sys, {{CD(0, 0)}});
  CHECK(defect.max_abs() == 0.0);
  // anywhere else the cleared defect is 8v, linear in the root
  auto off = bae_residual(sys, {{CD(0.5, 0)}});
  CHECK(std::abs(off.defects[0][0] - CD(4.0, 0)) < 1e-12);
  auto off2 = bae_residual(sys, {{CD(-0.25, 0)}});
  CHECK(std::abs(off2.defects[0][0] - CD(-2.0, 0)) < 1e-12);
}

TEST_CASE("solver finds the degenerate root of the two-site even chain") {
  Grading sl2(1, -1, {1, 1});
  BAESystem sys(sl2, {1}, {CD(0, 0), CD(0, 0)});
  SolveInfo info;
  auto sols = solve(sys, {}, &info);
  REQUIRE(!sols.empty());
  CHECK(std::abs(sols[0].roots[0][0]) < 1e-10);
  CHECK(sols[0].residual < 1e-10);
  CHECK(info.converged > 0);
}

TEST_CASE("solutions are deterministic for a fixed seed offset") {
  Grading g = grading_from_signs(0, 1, "-+-");
  BAESystem sys(g, {2, 1}, {CD(0, 0), CD(0, 0)});
  SolveConfig cfg;
  cfg.seed_offset = 5;
  auto a = solve(sys, cfg);
  auto b = solve(sys, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a[i].roots.size(); ++c)
      for (std::size_t k = 0; k < a[i].roots[c].size(); ++k)
        CHECK(a[i].roots[c][k] == b[i].roots[c][k]);
}

TEST_CASE("oversized systems are refused by the cap") {
  Grading g = grading_from_signs(1, 1, "++--");
  BAESystem sys(g, {3, 3, 3}, std::vector<CD>(4, CD(0, 0)));
  CHECK_THROWS(solve(sys));
  SolveConfig wide;
  wide.root_cap = 16;
  wide.max_seeds = 2;  // just probe that the run starts
  CHECK_NOTHROW(solve(sys, wide));
}

TEST_CASE("empty systems yield one empty solution") {
  Grading g = grading_from_signs(1, 0, "++-");
  BAESystem sys(g, {0, 0}, {CD(0, 0), CD(0, 0)});
  auto sols = solve(sys);
  REQUIRE(sols.size() == 1);
  for (const auto& col : sols[0].roots) CHECK(col.empty());
  CHECK(sols[0].residual == 0.0);
}

TEST_CASE("one color-2 equation is structurally unsolvable at counts (1,1)") {
  // on the +-- sign sequence the second equation clears to the constant 4,
  // independent of every root and inhomogeneity; no finite root configuration
  // can satisfy it
  Grading g = grading_from_signs(0, 1, "+--");
  for (int sites : {1, 2, 3}) {
    BAESystem sys(g, {1, 1}, std::vector<CD>(sites, CD(0, 0)));
    for (const auto& pt :
         {std::pair{CD(0.3, 0.1), CD(-1.1, 0.4)},
          std::pair{CD(-2.0, 0.0), CD(0.7, -0.9)}}) {
      auto defect = bae_residual(sys, {{pt.first}, {pt.second}});
      CHECK(std::abs(defect.defects[1][0] - CD(4, 0)) < 1e-12);
    }
    // consequently the solver must come back empty-handed
    auto sols = solve(sys);
    CHECK(sols.empty());
  }
}

TEST_CASE("solvable sign sequences of the same algebra admit on-shell data") {
  // counts (2,1) work on the +-- sequence
  Grading g = grading_from_signs(0, 1, "+--");
  BAESystem sys(g, {2, 1}, {CD(0, 0), CD(0, 0)});
  auto sols = solve(sys);
  REQUIRE(!sols.empty());
  for (const auto& sol : sols) CHECK(sol.residual < 1e-9);
}

TEST_CASE("pair residues cancel on shell and not off shell") {
  Grading g = grading_from_signs(1, 0, "++-");
  BAESystem sys(g, {2, 1}, {CD(0, 0), CD(0, 0)});
  auto sols = solve(sys);
  REQUIRE(!sols.empty());
  bool found_clean = false;
  for (const auto& sol : sols) {
    if (sol.collision) continue;
    auto d = to_bethe_data(sys, sol.roots);
    found_clean = true;
    for (int b = 1; b <= g.colors(); ++b) {
      auto rep = pair_residue_check(d, b);
      CHECK(rep.max_residue < 1e-9);
    }
    // the full single-column sums stay finite at every candidate pole
    for (int a = 1; a <= 2; ++a)
      CHECK(pole_freeness_check_column(d, a).max_residue < 1e-8);
  }
  CHECK(found_clean);

  // off-shell data leaves an uncancelled residue
  BetheData<CD> off(g, {{CD(0.31, 0.17)}, {CD(-0.83, 0.41)}},
                    {CD(0, 0), CD(0, 0)});
  double worst = 0.0;
  for (int b = 1; b <= g.colors(); ++b)
    worst = std::max(worst, pair_residue_check(off, b).max_residue);
  CHECK(worst > 1e-4);
}

TEST_CASE("pole pairing graph has the expected edge multiset") {
  Grading g = grading_from_signs(1, 0, "+-+");
  // generic off-shell data: the pairing structure is combinatorial and does
  // not need on-shell roots
  BetheData<CD> d(g, {{CD(0.37, 0.21), CD(-1.13, 0.64)},
                      {CD(0.52, -0.33), CD(-0.71, 0.18)}},
                  {CD(0.11, 0), CD(-0.47, 0)});
  SkewShape sh{Partition({2, 1})};

  auto rep1 = cancellation_pairs(d, sh, 1);
  REQUIRE(rep1.edges.size() == 4);
  int m13 = 0, m11 = 0;
  for (const auto& e : rep1.edges) {
    CHECK(e.color == 1);
    if (e.shift == -3) ++m13;
    if (e.shift == -1) ++m11;
  }
  CHECK(m13 == 2);
  CHECK(m11 == 2);

  auto rep2 = cancellation_pairs(d, sh, 2);
  REQUIRE(rep2.edges.size() == 6);
  int p2 = 0, p22 = 0;
  for (const auto& e : rep2.edges) {
    CHECK(e.color == 2);
    if (e.shift == 2) ++p2;
    if (e.shift == -2) ++p22;
  }
  CHECK(p2 == 4);
  CHECK(p22 == 2);

  // each edge joins a summand carrying letter b to one carrying letter b+1
  CHECK(rep1.terms.size() == 8);
  for (const auto& e : rep2.edges) {
    bool from_has = false, to_has = false;
    for (int v : rep2.terms[e.from].flat()) from_has |= (v == 2);
    for (int v : rep2.terms[e.to].flat()) to_has |= (v == 3);
    CHECK(from_has);
    CHECK(to_has);
  }
  CHECK(!rep2.dot.empty());
}

TEST_CASE("single-cell chain pairs consecutive letters once per color") {
  Grading g = grading_from_signs(1, 1, "+-+-");
  BetheData<CD> d(g, {{CD(0.41, 0.23)}, {CD(-0.67, 0.11)}, {CD(0.89, -0.35)}},
                  {CD(0.19, 0)});
  SkewShape cell{Partition({1})};
  for (int b = 1; b <= g.colors(); ++b) {
    auto rep = cancellation_pairs(d, cell, b);
    REQUIRE(rep.edges.size() == 1);
    CHECK(rep.edges[0].color == b);
    // the single-box sum pairs the letter-b term with the letter-(b+1) term
    CHECK(rep.terms[rep.edges[0].from].flat() == std::vector<int>{b});
    CHECK(rep.terms[rep.edges[0].to].flat() == std::vector<int>{b + 1});
  }
}

TEST_CASE("pair cancellation holds on shell for every edge") {
  Grading g = grading_from_signs(0, 1, "+--");
  BAESystem sys(g, {2, 1}, {CD(0, 0), CD(0, 0)});
  auto sols = solve(sys);
  REQUIRE(!sols.empty());
  for (const auto& sol : sols) {
    if (sol.collision) continue;
    auto d = to_bethe_data(sys, sol.roots);
    for (int b = 1; b <= g.colors(); ++b) {
      auto rep = cancellation_pairs(d, SkewShape{Partition({2, 1})}, b);
      if (rep.degenerate) continue;
      CHECK(rep.max_pair_residue < 1e-8);
    }
  }
}
