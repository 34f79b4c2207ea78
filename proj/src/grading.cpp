#include "slbethe/grading.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slbethe {

Grading::Grading(int r, int s, std::vector<int> p) : r_(r), s_(s), p_(std::move(p)) {
  if (r_ < -1 || s_ < -1 || r_ + s_ + 2 < 1)
    throw std::invalid_argument("grading ranks out of range");
  if (static_cast<int>(p_.size()) != size())
    throw std::invalid_argument("grading sign count does not match ranks");
  int plus = 0, minus = 0;
  for (int v : p_) {
    if (v == 1)
      ++plus;
    else if (v == -1)
      ++minus;
    else
      throw std::invalid_argument("grading signs must be +1 or -1");
  }
  if (plus != r_ + 1 || minus != s_ + 1)
    throw std::invalid_argument("grading must have r+1 plus and s+1 minus signs");
}

Grading Grading::distinguished(int r, int s) {
  std::vector<int> p(static_cast<std::size_t>(r + s + 2), -1);
  for (int i = 0; i <= r; ++i) p[static_cast<std::size_t>(i)] = 1;
  return Grading(r, s, std::move(p));
}

int Grading::p(int a) const {
  if (a < 1 || a > size()) throw std::out_of_range("grading sign index");
  return p_[static_cast<std::size_t>(a - 1)];
}

int Grading::prefix_sum(int a) const {
  if (a < 0 || a > size()) throw std::out_of_range("grading prefix index");
  int acc = 0;
  for (int j = 1; j <= a; ++j) acc += p(j);
  return acc;
}

int Grading::root_degree(int a) const {
  if (a < 1 || a > colors()) throw std::out_of_range("simple root index");
  return (1 - p(a) * p(a + 1)) / 2;
}

int Grading::cartan_pairing(int k, int l) const {
  if (k < 1 || k > colors() || l < 1 || l > colors())
    throw std::out_of_range("pairing index");
  int v = 0;
  if (k == l) v += p(k) + p(k + 1);
  if (k + 1 == l) v -= p(k + 1);
  if (k == l + 1) v -= p(k);
  return v;
}

Grading Grading::odd_reflection(int b) const {
  if (!odd_root(b))
    throw std::invalid_argument("reflection is only defined at an odd root");
  std::vector<int> q(p_);
  std::swap(q[static_cast<std::size_t>(b - 1)], q[static_cast<std::size_t>(b)]);
  return Grading(r_, s_, std::move(q));
}

std::string Grading::signs() const {
  std::string out;
  out.reserve(p_.size());
  for (int v : p_) out.push_back(v == 1 ? '+' : '-');
  return out;
}

std::vector<Grading> enumerate_gradings(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("enumerate_gradings needs r, s >= 0");
  // 0 stands for +1 so that the ascending start is the distinguished grading
  std::vector<int> mask(static_cast<std::size_t>(r + s + 2), 1);
  for (int i = 0; i <= r; ++i) mask[static_cast<std::size_t>(i)] = 0;
  std::vector<Grading> out;
  do {
    std::vector<int> p(mask.size());
    std::transform(mask.begin(), mask.end(), p.begin(),
                   [](int m) { return m == 0 ? 1 : -1; });
    out.emplace_back(r, s, std::move(p));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

Grading grading_from_signs(int r, int s, const std::string& signs) {
  std::vector<int> p;
  p.reserve(signs.size());
  for (char c : signs) {
    if (c == '+')
      p.push_back(1);
    else if (c == '-')
      p.push_back(-1);
    else
      throw std::invalid_argument("grading signs must be '+' or '-'");
  }
  return Grading(r, s, std::move(p));
}

std::string dynkin_dot(const Grading& g) {
  std::ostringstream os;
  os << "graph dynkin {\n  rankdir=LR;\n";
  for (int a = 1; a <= g.colors(); ++a) {
    os << "  n" << a << " [shape=circle, label=\"" << a << "\"";
    if (g.odd_root(a)) os << ", style=diagonals";
    os << "];\n";
  }
  for (int a = 1; a + 1 <= g.colors(); ++a)
    os << "  n" << a << " -- n" << a + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::pair<int, int>> reflection_edges(const std::vector<Grading>& gs) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (int b = 1; b <= gs[i].colors(); ++b) {
      if (!gs[i].odd_root(b)) continue;
      const Grading h = gs[i].odd_reflection(b);
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (gs[j] == h) {
          edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
          break;
        }
      }
    }
  }
  return edges;
}

}  // namespace slbethe
