#include "slbethe/weights.hpp"

#include <stdexcept>

namespace slbethe {

long bilinear_form(const Grading& g, const WVec& x, const WVec& y) {
  const std::size_t np = static_cast<std::size_t>(g.r() + 1);
  const std::size_t n = static_cast<std::size_t>(g.size());
  if (x.size() != n || y.size() != n) throw std::invalid_argument("weight size");
  long acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long term = static_cast<long>(x[i]) * y[i];
    acc += (i < np) ? term : -term;
  }
  return acc;
}

std::vector<WVec> basis_vectors(const Grading& g) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  std::vector<WVec> vs;
  vs.reserve(n);
  std::size_t next_plus = 0;
  std::size_t next_minus = static_cast<std::size_t>(g.r() + 1);
  for (int a = 1; a <= g.size(); ++a) {
    WVec v(n, 0);
    if (g.is_plus(a))
      v[next_plus++] = 1;
    else
      v[next_minus++] = 1;
    vs.push_back(std::move(v));
  }
  return vs;
}

std::vector<WVec> simple_roots(const Grading& g) {
  const auto vs = basis_vectors(g);
  std::vector<WVec> roots;
  roots.reserve(vs.size() - 1);
  for (std::size_t a = 0; a + 1 < vs.size(); ++a) {
    WVec alpha(vs[a]);
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] -= vs[a + 1][i];
    roots.push_back(std::move(alpha));
  }
  return roots;
}

std::vector<WVec> reflect_simple_system(const Grading& g, int b) {
  if (!g.odd_root(b))
    throw std::invalid_argument("reflection is only defined at an odd root");
  const auto roots = simple_roots(g);
  const WVec& alpha = roots[static_cast<std::size_t>(b - 1)];
  std::vector<WVec> out;
  out.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (static_cast<int>(k) == b - 1) {
      WVec neg(alpha);
      for (int& c : neg) c = -c;
      out.push_back(std::move(neg));
      continue;
    }
    WVec beta(roots[k]);
    if (bilinear_form(g, alpha, beta) != 0)
      for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += alpha[i];
    out.push_back(std::move(beta));
  }
  return out;
}

}  // namespace slbethe
