#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slbethe/grading.hpp"

namespace slbethe {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  // 1-based, zero beyond the last row
  int part(int i) const;
  int total() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  std::string to_string() const;  // "(3,1)", empty partition prints "()"

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
};

// skew diagram lambda-inside-mu; rows i = 1..mu.rows(), cells (i, j) with
// lambda_i < j <= mu_i
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition mu, Partition lambda);
  explicit SkewShape(Partition mu) : SkewShape(std::move(mu), Partition()) {}

  const Partition& mu() const { return mu_; }
  const Partition& lambda() const { return lambda_; }

  int width() const { return mu_.part(1); }   // mu_1
  int height() const { return mu_.rows(); }   // mu'_1
  bool has_cell(int i, int j) const;
  std::vector<std::pair<int, int>> cells() const;  // row-major, 1-based
  int cell_count() const { return mu_.total() - lambda_.total(); }

  // spectral-parameter offset attached to cell (i, j) in transfer sums
  int cell_shift(int i, int j) const { return -width() + height() - 2 * i + 2 * j; }

  std::string to_string() const;  // "(3,1)/(1)", plain "(3,1)" when straight

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.mu_ == b.mu_ && a.lambda_ == b.lambda_;
  }

 private:
  Partition mu_, lambda_;
};

class Tableau {
 public:
  // entries listed in row-major cell order (holes skipped)
  Tableau(SkewShape shape, const std::vector<int>& entries);

  const SkewShape& shape() const { return shape_; }
  int entry(int i, int j) const;  // 1-based, 0 on holes/outside
  const std::vector<int>& flat() const { return flat_; }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.flat_ == b.flat_;
  }

 private:
  SkewShape shape_;
  std::vector<int> flat_;
  std::vector<std::vector<int>> grid_;  // 0 = hole
};

// admissibility of a filling with letters 1..r+s+2: weak increase along
// rows and down columns, repeats along a row only for plus-type letters,
// repeats down a column only for minus-type letters
bool is_admissible(const Tableau& t, const Grading& g);

// all admissible fillings, ordered lexicographically by the row-major entry
// list; shapes larger than max_cells are refused to keep runtime bounded
std::vector<Tableau> enumerate_tableaux(const SkewShape& sh, const Grading& g,
                                        std::size_t max_cells = 24);

// true when the skew diagram contains a full (r+2) x (s+2) block of cells;
// transfer functions on such shapes vanish identically
bool contains_forbidden_rectangle(const SkewShape& sh, int r, int s);

}  // namespace slbethe
