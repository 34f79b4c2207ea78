#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "slbethe/grading.hpp"
#include "slbethe/shapes.hpp"

using namespace slbethe;

TEST_CASE("partitions validate weak decrease and positivity") {
  Partition p({3, 1});
  CHECK(p.rows() == 2);
  CHECK(p.part(1) == 3);
  CHECK(p.part(2) == 1);
  CHECK(p.part(3) == 0);  // zero beyond the last row
  CHECK(p.total() == 4);
  CHECK_THROWS(Partition({1, 3}));
  CHECK_THROWS(Partition({2, 0, 1}));
  CHECK(Partition({2, 0}) == Partition({2}));  // trailing zeros normalize away
  CHECK(Partition().empty());
  CHECK(Partition().total() == 0);
}

TEST_CASE("conjugation transposes the diagram") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  // involution on a few shapes
  for (const auto& parts :
       std::vector<std::vector<int>>{{3, 2, 2}, {4, 1}, {2}, {1, 1, 1}}) {
    Partition q(parts);
    CHECK(q.conjugate().conjugate() == q);
  }
}

TEST_CASE("containment compares row by row") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(Partition({3, 2}).contains(Partition()));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({3, 3})));
}

TEST_CASE("skew cells walk the diagram row-major with holes removed") {
  SkewShape sh(Partition({3, 2}), Partition({1}));
  CHECK(sh.cell_count() == 4);
  std::vector<std::pair<int, int>> want = {{1, 2}, {1, 3}, {2, 1}, {2, 2}};
  CHECK(sh.cells() == want);
  CHECK(sh.has_cell(1, 2));
  CHECK_FALSE(sh.has_cell(1, 1));  // removed by the inner shape
  CHECK_FALSE(sh.has_cell(2, 3));
  CHECK_THROWS(SkewShape(Partition({2}), Partition({3})));  // not contained

  CHECK(sh.to_string() == "(3,2)/(1)");
  CHECK(SkewShape(Partition({3, 2})).to_string() == "(3,2)");
}

TEST_CASE("cell shifts step by two along rows and columns") {
  SkewShape sh{Partition({2, 1})};
  // -mu_1 + mu'_1 - 2i + 2j
  CHECK(sh.cell_shift(1, 1) == 0);
  CHECK(sh.cell_shift(1, 2) == 2);
  CHECK(sh.cell_shift(2, 1) == -2);
  // neighbors differ by exactly 2
  SkewShape big{Partition({3, 3, 2})};
  for (auto [i, j] : big.cells()) {
    if (big.has_cell(i, j + 1))
      CHECK(big.cell_shift(i, j + 1) - big.cell_shift(i, j) == 2);
    if (big.has_cell(i + 1, j))
      CHECK(big.cell_shift(i, j) - big.cell_shift(i + 1, j) == 2);
  }
}

TEST_CASE("tableau entries map back to their cells") {
  SkewShape sh(Partition({2, 1}));
  Tableau t(sh, {1, 2, 2});
  CHECK(t.entry(1, 1) == 1);
  CHECK(t.entry(1, 2) == 2);
  CHECK(t.entry(2, 1) == 2);
  CHECK(t.entry(2, 2) == 0);  // outside
  CHECK_THROWS(Tableau(sh, {1, 2}));  // wrong entry count
}

TEST_CASE("admissibility distinguishes plus and minus letters") {
  // letter 2 is the minus one here
  Grading g = grading_from_signs(1, 0, "+-+");
  SkewShape row{Partition({2})};
  CHECK(is_admissible(Tableau(row, {1, 1}), g));       // plus repeats in a row
  CHECK_FALSE(is_admissible(Tableau(row, {2, 2}), g)); // minus may not
  CHECK(is_admissible(Tableau(row, {1, 2}), g));
  CHECK_FALSE(is_admissible(Tableau(row, {2, 1}), g)); // must not decrease

  SkewShape col{Partition({1, 1})};
  CHECK(is_admissible(Tableau(col, {2, 2}), g));       // minus repeats in a column
  CHECK_FALSE(is_admissible(Tableau(col, {1, 1}), g)); // plus may not
  CHECK_FALSE(is_admissible(Tableau(col, {3, 1}), g));

  // full minus column of height 3 is allowed, the plus analogue is not
  SkewShape col3{Partition({1, 1, 1})};
  CHECK(is_admissible(Tableau(col3, {2, 2, 2}), g));
  CHECK_FALSE(is_admissible(Tableau(col3, {1, 1, 1}), g));
}

TEST_CASE("enumeration is lexicographic and matches the reference case") {
  Grading g = grading_from_signs(1, 0, "+-+");
  auto ts = enumerate_tableaux(SkewShape{Partition({2, 1})}, g);
  REQUIRE(ts.size() == 8);
  const std::vector<std::vector<int>> flats = {
      {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3},
      {1, 3, 2}, {1, 3, 3}, {2, 3, 2}, {2, 3, 3}};
  for (std::size_t k = 0; k < ts.size(); ++k) CHECK(ts[k].flat() == flats[k]);

  // sign of a filling = product of letter signs
  const std::vector<int> signs = {-1, 1, 1, -1, -1, 1, 1, -1};
  for (std::size_t k = 0; k < ts.size(); ++k) {
    int sgn = 1;
    for (int v : ts[k].flat()) sgn *= g.p(v);
    CHECK(sgn == signs[k]);
  }
}

TEST_CASE("every enumerated filling is admissible and none is missed") {
  for (const auto& g : enumerate_gradings(1, 1)) {
    SkewShape sh(Partition({2, 2}), Partition({1}));
    auto ts = enumerate_tableaux(sh, g);
    CHECK(std::is_sorted(ts.begin(), ts.end(),
                         [](const Tableau& a, const Tableau& b) {
                           return a.flat() < b.flat();
                         }));
    long admissible = 0;
    // brute force over all letter assignments
    const int n = sh.cell_count();
    std::vector<int> f(static_cast<std::size_t>(n), 1);
    while (true) {
      if (is_admissible(Tableau(sh, f), g)) ++admissible;
      int k = n - 1;
      while (k >= 0 && f[static_cast<std::size_t>(k)] == g.size()) {
        f[static_cast<std::size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++f[static_cast<std::size_t>(k)];
    }
    CHECK(admissible == static_cast<long>(ts.size()));
  }
}

TEST_CASE("single cell admits every letter") {
  for (const auto& g : enumerate_gradings(1, 1))
    CHECK(enumerate_tableaux(SkewShape{Partition({1})}, g).size() ==
          static_cast<std::size_t>(g.size()));
}

TEST_CASE("oversized shapes are refused") {
  Grading g = Grading::distinguished(1, 1);
  SkewShape sh{Partition({6, 6, 6, 6, 6})};  // 30 cells
  CHECK_THROWS(enumerate_tableaux(sh, g));
  CHECK_NOTHROW(enumerate_tableaux(sh, g, 32));
}

TEST_CASE("forbidden rectangle detection") {
  // an (r+2) x (s+2) block of cells forces the transfer function to vanish
  CHECK(contains_forbidden_rectangle(SkewShape{Partition({2, 2})}, 0, 0));
  CHECK_FALSE(contains_forbidden_rectangle(SkewShape{Partition({2, 1})}, 0, 0));
  CHECK(contains_forbidden_rectangle(SkewShape{Partition({2, 2, 2})}, 1, 0));
  CHECK_FALSE(contains_forbidden_rectangle(SkewShape{Partition({2, 2, 1})}, 1, 0));
  // the hole can break the block even when mu alone would contain it
  CHECK_FALSE(contains_forbidden_rectangle(
      SkewShape(Partition({2, 2}), Partition({1})), 0, 0));
  CHECK(contains_forbidden_rectangle(
      SkewShape(Partition({3, 3}), Partition({1})), 0, 0));
}
