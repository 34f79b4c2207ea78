#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "slbethe/grading.hpp"
#include "slbethe/weights.hpp"

using namespace slbethe;

TEST_CASE("sign sequences carry fixed plus and minus multiplicities") {
  Grading g = grading_from_signs(1, 0, "+-+");
  CHECK(g.size() == 3);
  CHECK(g.colors() == 2);
  CHECK(g.p(1) == 1);
  CHECK(g.p(2) == -1);
  CHECK(g.p(3) == 1);
  CHECK(g.signs() == "+-+");
  CHECK_THROWS(grading_from_signs(1, 0, "++-+"));  // wrong length
  CHECK_THROWS(grading_from_signs(1, 0, "+--"));   // wrong multiplicities
  CHECK_THROWS(grading_from_signs(1, 0, "+?+"));
}

TEST_CASE("distinguished grading puts all plus signs first") {
  CHECK(Grading::distinguished(1, 1).signs() == "++--");
  CHECK(Grading::distinguished(0, 1).signs() == "+--");
  CHECK(Grading::distinguished(2, 0).signs() == "+++-");
}

TEST_CASE("enumeration counts match the multiset permutation count") {
  // 4!/(2!2!) = 6 and 3!/(1!2!) = 3
  CHECK(enumerate_gradings(1, 1).size() == 6);
  CHECK(enumerate_gradings(0, 1).size() == 3);
  CHECK(enumerate_gradings(1, 0).size() == 3);
  CHECK(enumerate_gradings(0, 0).size() == 2);
  CHECK(enumerate_gradings(2, 2).size() == 20);

  // distinguished first, no duplicates
  auto gs = enumerate_gradings(1, 1);
  CHECK(gs.front() == Grading::distinguished(1, 1));
  std::set<std::string> seen;
  for (const auto& g : gs) seen.insert(g.signs());
  CHECK(seen.size() == gs.size());
}

TEST_CASE("prefix sums and root degrees") {
  Grading g = grading_from_signs(1, 1, "+-+-");
  CHECK(g.prefix_sum(0) == 0);
  CHECK(g.prefix_sum(1) == 1);
  CHECK(g.prefix_sum(2) == 0);
  CHECK(g.prefix_sum(4) == 0);
  // a root is odd exactly when the adjacent signs differ
  CHECK(g.root_degree(1) == 1);
  CHECK(g.root_degree(2) == 1);
  CHECK(g.root_degree(3) == 1);
  Grading dist = Grading::distinguished(1, 1);
  CHECK(dist.root_degree(1) == 0);
  CHECK(dist.root_degree(2) == 1);
  CHECK(dist.root_degree(3) == 0);
}

TEST_CASE("Cartan pairing follows the sign pattern") {
  Grading g = grading_from_signs(1, 0, "++-");
  CHECK(g.cartan_pairing(1, 1) == 2);   // p1 + p2
  CHECK(g.cartan_pairing(2, 2) == 0);   // p2 + p3, odd root
  CHECK(g.cartan_pairing(1, 2) == -1);  // -p2
  CHECK(g.cartan_pairing(2, 1) == -1);
  Grading h = grading_from_signs(0, 1, "-+-");
  CHECK(h.cartan_pairing(1, 1) == 0);
  CHECK(h.cartan_pairing(2, 2) == 0);
  CHECK(h.cartan_pairing(1, 2) == -1);  // -p2 = -1
}

TEST_CASE("pairing equals the bilinear form on simple roots") {
  for (const auto& g : enumerate_gradings(1, 1)) {
    auto roots = simple_roots(g);
    REQUIRE(static_cast<int>(roots.size()) == g.colors());
    for (int k = 1; k <= g.colors(); ++k)
      for (int l = 1; l <= g.colors(); ++l)
        CHECK(g.cartan_pairing(k, l) ==
              bilinear_form(g, roots[k - 1], roots[l - 1]));
  }
}

TEST_CASE("basis vectors are orthogonal with signature given by the signs") {
  Grading g = grading_from_signs(1, 1, "+--+");
  auto vs = basis_vectors(g);
  REQUIRE(static_cast<int>(vs.size()) == g.size());
  for (int a = 1; a <= g.size(); ++a)
    for (int b = 1; b <= g.size(); ++b)
      CHECK(bilinear_form(g, vs[a - 1], vs[b - 1]) == (a == b ? g.p(a) : 0));
  // odd roots are exactly the isotropic simple roots
  auto roots = simple_roots(g);
  for (int k = 1; k <= g.colors(); ++k)
    CHECK((bilinear_form(g, roots[k - 1], roots[k - 1]) == 0) ==
          g.odd_root(k));
}

TEST_CASE("odd reflection swaps the adjacent signs") {
  Grading g = grading_from_signs(1, 0, "+-+");
  CHECK(g.odd_reflection(1).signs() == "-++");
  CHECK(g.odd_reflection(2).signs() == "++-");
  // for even roots the operation is undefined
  Grading dist = Grading::distinguished(1, 0);  // "++-"
  CHECK_THROWS(dist.odd_reflection(1));
  CHECK_THROWS(g.odd_reflection(0));
  CHECK_THROWS(g.odd_reflection(3));
}

TEST_CASE("reflecting the simple system realizes the swapped grading") {
  // the reflected roots must coincide with the simple roots computed
  // directly from the new sign sequence
  for (const auto& g : enumerate_gradings(1, 1))
    for (int b = 1; b <= g.colors(); ++b) {
      if (!g.odd_root(b)) continue;
      CHECK(reflect_simple_system(g, b) ==
            simple_roots(g.odd_reflection(b)));
    }
}

TEST_CASE("reflection graph connects every grading to the distinguished one") {
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      auto gs = enumerate_gradings(r, s);
      auto edges = reflection_edges(gs);
      // undirected reachability from index 0
      std::vector<char> seen(gs.size(), 0);
      seen[0] = 1;
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto [i, j] : edges) {
          if (seen[i] && !seen[j]) seen[j] = grew = true;
          if (seen[j] && !seen[i]) seen[i] = grew = true;
        }
      }
      CHECK(std::count(seen.begin(), seen.end(), 1) ==
            static_cast<long>(gs.size()));
    }
}

TEST_CASE("reflection edges connect gradings differing by one odd swap") {
  auto gs = enumerate_gradings(1, 1);
  for (auto [i, j] : reflection_edges(gs)) {
    bool linked = false;
    for (int b = 1; b <= gs[i].colors(); ++b)
      if (gs[i].odd_root(b) && gs[i].odd_reflection(b) == gs[j]) linked = true;
    CHECK(linked);
  }
}

TEST_CASE("diagram rendering emits one node per color") {
  Grading g = grading_from_signs(1, 1, "+-+-");
  std::string dot = dynkin_dot(g);
  CHECK(dot.find("graph") != std::string::npos);
  // crossed nodes for the odd roots of this alternating grading
  CHECK(dot.find("1") != std::string::npos);
  CHECK(dot.find("3") != std::string::npos);
}

TEST_CASE("rank parameters below the minimum are rejected") {
  CHECK_THROWS(Grading(-2, 0, {}));
  CHECK_THROWS(enumerate_gradings(-1, 0));
  // the plain even algebra appears as the s = -1 edge case
  Grading sl2(1, -1, {1, 1});
  CHECK(sl2.colors() == 1);
  CHECK(sl2.root_degree(1) == 0);
}
