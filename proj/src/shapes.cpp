#include "slbethe/shapes.hpp"

#include <numeric>
#include <stdexcept>

namespace slbethe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition row index");
  if (i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int len : parts_)
    for (int j = 0; j < len; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

SkewShape::SkewShape(Partition mu, Partition lambda)
    : mu_(std::move(mu)), lambda_(std::move(lambda)) {
  if (!mu_.contains(lambda_))
    throw std::invalid_argument("skew shape requires lambda inside mu");
}

bool SkewShape::has_cell(int i, int j) const {
  if (i < 1 || i > height()) return false;
  return j > lambda_.part(i) && j <= mu_.part(i);
}

std::string SkewShape::to_string() const {
  if (lambda_.empty()) return mu_.to_string();
  return mu_.to_string() + "/" + lambda_.to_string();
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(cell_count()));
  for (int i = 1; i <= height(); ++i)
    for (int j = lambda_.part(i) + 1; j <= mu_.part(i); ++j) out.emplace_back(i, j);
  return out;
}

Tableau::Tableau(SkewShape shape, const std::vector<int>& entries)
    : shape_(std::move(shape)), flat_(entries) {
  const auto cs = shape_.cells();
  if (cs.size() != entries.size())
    throw std::invalid_argument("tableau entry count does not match shape");
  grid_.assign(static_cast<std::size_t>(shape_.height()) + 1, {});
  for (int i = 1; i <= shape_.height(); ++i)
    grid_[static_cast<std::size_t>(i)].assign(
        static_cast<std::size_t>(shape_.mu().part(i)) + 1, 0);
  for (std::size_t k = 0; k < cs.size(); ++k)
    grid_[static_cast<std::size_t>(cs[k].first)][static_cast<std::size_t>(cs[k].second)] =
        entries[k];
}

int Tableau::entry(int i, int j) const {
  if (i < 1 || i >= static_cast<int>(grid_.size())) return 0;
  const auto& row = grid_[static_cast<std::size_t>(i)];
  if (j < 1 || j >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

bool is_admissible(const Tableau& t, const Grading& g) {
  const SkewShape& sh = t.shape();
  for (const auto& [i, j] : sh.cells()) {
    const int e = t.entry(i, j);
    if (e < 1 || e > g.size()) return false;
    if (sh.has_cell(i, j + 1)) {
      const int right = t.entry(i, j + 1);
      if (e > right) return false;
      if (e == right && !g.is_plus(e)) return false;  // minus letters strict in rows
    }
    if (sh.has_cell(i + 1, j)) {
      const int below = t.entry(i + 1, j);
      if (e > below) return false;
      if (e == below && g.is_plus(e)) return false;  // plus letters strict in columns
    }
  }
  return true;
}

namespace {

void extend(const SkewShape& sh, const Grading& g,
            const std::vector<std::pair<int, int>>& cs, std::vector<int>& cur,
            std::vector<Tableau>& out) {
  if (cur.size() == cs.size()) {
    out.emplace_back(sh, cur);
    return;
  }
  const auto [i, j] = cs[cur.size()];
  int lo = 1;
  // the two local constraints are exactly the admissibility rules, so a
  // filled prefix can always be checked against neighbors already placed
  auto find_entry = [&](int pi, int pj) -> int {
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (cs[k].first == pi && cs[k].second == pj) return cur[k];
    return 0;
  };
  if (sh.has_cell(i, j - 1)) {
    const int left = find_entry(i, j - 1);
    if (left > 0) lo = std::max(lo, left + (g.is_plus(left) ? 0 : 1));
  }
  if (sh.has_cell(i - 1, j)) {
    const int above = find_entry(i - 1, j);
    if (above > 0) lo = std::max(lo, above + (g.is_plus(above) ? 1 : 0));
  }
  for (int e = lo; e <= g.size(); ++e) {
    cur.push_back(e);
    extend(sh, g, cs, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewShape& sh, const Grading& g,
                                        std::size_t max_cells) {
  if (static_cast<std::size_t>(sh.cell_count()) > max_cells)
    throw std::length_error("shape exceeds the tableau enumeration cell cap");
  std::vector<Tableau> out;
  std::vector<int> cur;
  extend(sh, g, sh.cells(), cur, out);
  return out;
}

bool contains_forbidden_rectangle(const SkewShape& sh, int r, int s) {
  const int h = r + 2, w = s + 2;
  for (int i = 1; i + h - 1 <= sh.height(); ++i) {
    for (int j = 1; j + w - 1 <= sh.width(); ++j) {
      bool full = true;
      for (int di = 0; di < h && full; ++di) {
        const int row = i + di;
        if (sh.lambda().part(row) >= j || sh.mu().part(row) < j + w - 1) full = false;
      }
      if (full) return true;
    }
  }
  return false;
}

}  // namespace slbethe
