#pragma once

#include <string>
#include <vector>

namespace slbethe {

// A choice of Z2-grading for gl(r+1|s+1): a sign sequence p_1..p_{r+s+2}
// with exactly r+1 entries +1 and s+1 entries -1. Sign conventions follow
// the analytic Bethe ansatz construction this library implements: color a
// of the nesting corresponds to the consecutive pair (p_a, p_{a+1}).
//
// The degenerate case s = -1 (every sign +1) is allowed so that ordinary
// sl(r+1) systems can be driven through the same code paths.
class Grading {
 public:
  Grading(int r, int s, std::vector<int> p);
  static Grading distinguished(int r, int s);

  int r() const { return r_; }
  int s() const { return s_; }
  int size() const { return r_ + s_ + 2; }    // number of signs
  int colors() const { return r_ + s_ + 1; }  // number of nesting levels

  // 1-based access, a in [1, size()]
  int p(int a) const;
  bool is_plus(int a) const { return p(a) == 1; }

  // sum of the first a signs; prefix_sum(0) == 0
  int prefix_sum(int a) const;

  // 0 for an even simple root (p_a == p_{a+1}), 1 for an odd one
  int root_degree(int a) const;
  bool odd_root(int a) const { return root_degree(a) == 1; }

  // symmetric bilinear form on the simple roots, k, l in [1, colors()]
  int cartan_pairing(int k, int l) const;

  // swaps the signs at positions b, b+1; only defined for odd roots
  Grading odd_reflection(int b) const;

  std::string signs() const;  // e.g. "+-+"

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Grading& a, const Grading& b) { return !(a == b); }
  // lexicographic, for deterministic containers
  friend bool operator<(const Grading& a, const Grading& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (a.s_ != b.s_) return a.s_ < b.s_;
    return a.p_ < b.p_;
  }

 private:
  int r_, s_;
  std::vector<int> p_;
};

// all gradings for given (r, s), distinguished one first, then in the
// deterministic order induced by listing +1 before -1
std::vector<Grading> enumerate_gradings(int r, int s);

Grading grading_from_signs(int r, int s, const std::string& signs);

// Dynkin diagram as DOT: a path of colors() nodes, odd nodes drawn crossed
// (style=diagonals)
std::string dynkin_dot(const Grading& g);

// used by tests and the CLI to show the full reflection groupoid: edges are
// single odd reflections between gradings
std::vector<std::pair<int, int>> reflection_edges(const std::vector<Grading>& gs);

}  // namespace slbethe
