#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "slbethe/grading.hpp"
#include "slbethe/poly.hpp"

namespace slbethe {

// One Bethe configuration: a grading, root multisets u^(a) for each color
// a = 1..colors, and the inhomogeneities w_j of the length-N spin chain.
template <class K>
struct BetheData {
  Grading g;
  std::vector<std::vector<K>> roots;  // roots[a-1] holds color a
  std::vector<K> inhom;

  BetheData(Grading grading, std::vector<std::vector<K>> rts, std::vector<K> w)
      : g(std::move(grading)), roots(std::move(rts)), inhom(std::move(w)) {
    if (static_cast<int>(roots.size()) != g.colors())
      throw std::invalid_argument("root list count must equal color count");
  }

  int sites() const { return static_cast<int>(inhom.size()); }
  int count(int a) const {
    if (a < 1 || a > g.colors()) throw std::out_of_range("color index");
    return static_cast<int>(roots[static_cast<std::size_t>(a - 1)].size());
  }

  // monic Q_a; the boundary values a = 0 and a = r+s+2 are the constant 1
  Poly<K> q_poly(int a) const {
    if (a == 0 || a == g.size()) return Poly<K>::one();
    if (a < 0 || a > g.size()) throw std::out_of_range("q polynomial index");
    return Poly<K>::from_roots(roots[static_cast<std::size_t>(a - 1)]);
  }

  Poly<K> vacuum_poly() const { return Poly<K>::from_roots(inhom); }
};

inline BetheData<CD> to_complex(const BetheData<Rat>& d) {
  std::vector<std::vector<CD>> roots(d.roots.size());
  for (std::size_t a = 0; a < d.roots.size(); ++a)
    for (const Rat& u : d.roots[a]) roots[a].push_back(to_complex(u));
  std::vector<CD> w;
  for (const Rat& x : d.inhom) w.push_back(to_complex(x));
  return BetheData<CD>(d.g, std::move(roots), std::move(w));
}

// Random exact data for identity tests. Every value is a reduced fraction
// with denominator in {2,3,5,7}, hence never an integer, so polynomial
// evaluations at integer abscissae can never land on a root.
inline Rat sample_noninteger_rational(std::mt19937_64& rng) {
  static const int dens[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> pick_den(0, 3);
  while (true) {
    const int q = dens[pick_den(rng)];
    std::uniform_int_distribution<int> pick_num(-3 * q, 3 * q);
    const int n = pick_num(rng);
    if (n % q != 0) return Rat(n, q);
  }
}

inline BetheData<Rat> sample_bethe_data(const Grading& g, std::mt19937_64& rng,
                                        int roots_per_color = 2, int sites = 2) {
  std::vector<std::vector<Rat>> roots(static_cast<std::size_t>(g.colors()));
  for (auto& col : roots)
    for (int k = 0; k < roots_per_color; ++k)
      col.push_back(sample_noninteger_rational(rng));
  std::vector<Rat> w;
  for (int j = 0; j < sites; ++j) w.push_back(sample_noninteger_rational(rng));
  return BetheData<Rat>(g, std::move(roots), std::move(w));
}

}  // namespace slbethe
