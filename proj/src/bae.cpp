#include "slbethe/bae.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slbethe {

BAESystem::BAESystem(Grading grading, std::vector<int> n, std::vector<CD> w)
    : g(std::move(grading)), counts(std::move(n)), inhom(std::move(w)) {
  if (static_cast<int>(counts.size()) != g.colors())
    throw std::invalid_argument("one root count per color required");
  for (int c : counts)
    if (c < 0) throw std::invalid_argument("root counts must be nonnegative");
}

int BAESystem::total_roots() const {
  int total = 0;
  for (int c : counts) total += c;
  return total;
}

double BAEDefect::max_abs() const {
  double m = 0.0;
  for (const auto& col : defects)
    for (const CD& v : col) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// one linear factor (u_eq + shift - z) of a cleared defect term, where z is
// either a Bethe root (variable) or an inhomogeneity (constant); var indices
// refer to the flattened root vector, -1 meaning no dependence
struct Factor {
  CD value;
  int var_plus;   // d value / d x = +1 for this variable
  int var_minus;  // d value / d x = -1 for this variable
};

struct Flattening {
  std::vector<int> offset;  // color -> first index in the flat vector
  int total = 0;
};

Flattening flatten(const BAESystem& sys) {
  Flattening f;
  f.offset.resize(static_cast<std::size_t>(sys.g.colors()) + 1, 0);
  for (int a = 1; a <= sys.g.colors(); ++a)
    f.offset[static_cast<std::size_t>(a)] =
        f.offset[static_cast<std::size_t>(a - 1)] +
        sys.counts[static_cast<std::size_t>(a - 1)];
  f.total = f.offset[static_cast<std::size_t>(sys.g.colors())];
  return f;
}

// factor lists of the two cleared products for equation (a, k); the sign of
// the second term already includes (-1)^{deg alpha_a}
struct Equation {
  std::vector<Factor> plus_term;   // -lhs_num * prod Q_b(u - c_b)
  std::vector<Factor> minus_term;  // sign * lhs_den * prod Q_b(u + c_b)
  double sign2;                    // -(-1)^{deg alpha_a}
};

Equation build_equation(const BAESystem& sys, const Flattening& fl,
                        const std::vector<CD>& x, int a, int k) {
  const Grading& g = sys.g;
  Equation eq;
  eq.sign2 = (g.root_degree(a) % 2 == 0) ? -1.0 : 1.0;
  const int eq_var = fl.offset[static_cast<std::size_t>(a - 1)] + k;
  const CD u = x[static_cast<std::size_t>(eq_var)];
  if (a == 1) {
    const double p1 = static_cast<double>(g.p(1));
    for (const CD& w : sys.inhom) {
      eq.plus_term.push_back({u + p1 - w, eq_var, -1});
      eq.minus_term.push_back({u - p1 - w, eq_var, -1});
    }
  }
  for (int b = 1; b <= g.colors(); ++b) {
    const int c = g.cartan_pairing(a, b);
    if (c == 0) continue;
    const int base = fl.offset[static_cast<std::size_t>(b - 1)];
    for (int j = 0; j < sys.counts[static_cast<std::size_t>(b - 1)]; ++j) {
      const CD root = x[static_cast<std::size_t>(base + j)];
      eq.plus_term.push_back({u - static_cast<double>(c) - root, eq_var, base + j});
      eq.minus_term.push_back({u + static_cast<double>(c) - root, eq_var, base + j});
    }
  }
  return eq;
}

CD term_value(const std::vector<Factor>& fs) {
  CD v(1.0, 0.0);
  for (const Factor& f : fs) v *= f.value;
  return v;
}

// accumulates coef * d(prod fs)/dx into one Jacobian row via leave-one-out
// prefix/suffix products, robust to zero factors
void add_term_gradient(const std::vector<Factor>& fs, const CD& coef,
                       Eigen::MatrixXcd& jac, int row) {
  const std::size_t n = fs.size();
  if (n == 0) return;
  std::vector<CD> pre(n + 1, CD(1.0, 0.0)), suf(n + 1, CD(1.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * fs[i].value;
  for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] * fs[i].value;
  for (std::size_t i = 0; i < n; ++i) {
    const CD cof = coef * pre[i] * suf[i + 1];
    if (fs[i].var_plus >= 0) jac(row, fs[i].var_plus) += cof;
    if (fs[i].var_minus >= 0) jac(row, fs[i].var_minus) -= cof;
  }
}

struct SystemEval {
  Eigen::VectorXcd value;
  Eigen::MatrixXcd jacobian;
  bool collision = false;
};

SystemEval evaluate(const BAESystem& sys, const Flattening& fl,
                    const std::vector<CD>& x, bool with_jacobian) {
  SystemEval out;
  out.value = Eigen::VectorXcd::Zero(fl.total);
  if (with_jacobian) out.jacobian = Eigen::MatrixXcd::Zero(fl.total, fl.total);
  int row = 0;
  for (int a = 1; a <= sys.g.colors(); ++a)
    for (int k = 0; k < sys.counts[static_cast<std::size_t>(a - 1)]; ++k, ++row) {
      const Equation eq = build_equation(sys, fl, x, a, k);
      const CD tp = term_value(eq.plus_term);
      const CD tm = term_value(eq.minus_term);
      out.value(row) = -tp + eq.sign2 * tm;
      if (tp == CD(0.0, 0.0) && tm == CD(0.0, 0.0)) out.collision = true;
      if (with_jacobian) {
        add_term_gradient(eq.plus_term, CD(-1.0, 0.0), out.jacobian, row);
        add_term_gradient(eq.minus_term, CD(eq.sign2, 0.0), out.jacobian, row);
      }
    }
  return out;
}

std::vector<std::vector<CD>> unflatten(const BAESystem& sys, const Flattening& fl,
                                       const std::vector<CD>& x) {
  std::vector<std::vector<CD>> roots(static_cast<std::size_t>(sys.g.colors()));
  for (int a = 1; a <= sys.g.colors(); ++a) {
    const int base = fl.offset[static_cast<std::size_t>(a - 1)];
    for (int j = 0; j < sys.counts[static_cast<std::size_t>(a - 1)]; ++j)
      roots[static_cast<std::size_t>(a - 1)].push_back(
          x[static_cast<std::size_t>(base + j)]);
  }
  return roots;
}

bool complex_less(const CD& a, const CD& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void sort_roots(std::vector<std::vector<CD>>& roots) {
  for (auto& col : roots) std::sort(col.begin(), col.end(), complex_less);
}

std::vector<CD> flat_sorted(const std::vector<std::vector<CD>>& roots) {
  std::vector<CD> out;
  for (const auto& col : roots) {
    std::vector<CD> c = col;
    std::sort(c.begin(), c.end(), complex_less);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

double radical_inverse(unsigned long i, unsigned base) {
  double inv = 1.0 / base, f = inv, x = 0.0;
  while (i) {
    x += static_cast<double>(i % base) * f;
    i /= base;
    f *= inv;
  }
  return x;
}

unsigned nth_prime(std::size_t n) {
  static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                    23, 29, 31, 37, 41, 43, 47, 53};
  if (n < sizeof(primes) / sizeof(primes[0])) return primes[n];
  unsigned candidate = primes[sizeof(primes) / sizeof(primes[0]) - 1];
  std::size_t found = sizeof(primes) / sizeof(primes[0]) - 1;
  while (found < n) {
    ++candidate;
    bool prime = true;
    for (unsigned d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    if (prime) ++found;
  }
  return candidate;
}

std::vector<CD> halton_seed(unsigned long index, int n, double box) {
  std::vector<CD> x(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const double re = radical_inverse(index, nth_prime(static_cast<std::size_t>(2 * v)));
    const double im =
        radical_inverse(index, nth_prime(static_cast<std::size_t>(2 * v + 1)));
    x[static_cast<std::size_t>(v)] = CD((2.0 * re - 1.0) * box, (2.0 * im - 1.0) * box);
  }
  return x;
}

}  // namespace

BAEDefect bae_residual(const BAESystem& sys,
                       const std::vector<std::vector<CD>>& roots) {
  if (static_cast<int>(roots.size()) != sys.g.colors())
    throw std::invalid_argument("one root list per color required");
  for (int a = 1; a <= sys.g.colors(); ++a)
    if (static_cast<int>(roots[static_cast<std::size_t>(a - 1)].size()) !=
        sys.counts[static_cast<std::size_t>(a - 1)])
      throw std::invalid_argument("root list sizes disagree with the system");
  const Flattening fl = flatten(sys);
  std::vector<CD> x;
  for (const auto& col : roots) x.insert(x.end(), col.begin(), col.end());
  const SystemEval ev = evaluate(sys, fl, x, false);
  BAEDefect out;
  out.collision = ev.collision;
  out.defects.resize(roots.size());
  int row = 0;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t k = 0; k < roots[a].size(); ++k, ++row)
      out.defects[a].push_back(ev.value(row));
  return out;
}

std::vector<BAESolution> solve(const BAESystem& sys, const SolveConfig& cfg,
                               SolveInfo* info) {
  if (sys.total_roots() > cfg.root_cap)
    throw std::invalid_argument("system size exceeds the configured root cap");
  const Flattening fl = flatten(sys);
  std::vector<BAESolution> found;
  if (info) *info = SolveInfo{};
  if (fl.total == 0) {
    // the empty assignment trivially satisfies every (nonexistent) equation
    BAESolution s;
    s.roots.resize(static_cast<std::size_t>(sys.g.colors()));
    found.push_back(std::move(s));
    if (info) info->converged = 1;
    return found;
  }

  for (int seed = 0; seed < cfg.max_seeds; ++seed) {
    if (info) ++info->seeds_tried;
    std::vector<CD> x =
        halton_seed(static_cast<unsigned long>(seed) + cfg.seed_offset + 1,
                    fl.total, cfg.box);
    bool rank_deficient = false;
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
      const SystemEval ev = evaluate(sys, fl, x, true);
      const double res = ev.value.cwiseAbs().maxCoeff();
      if (res < cfg.tol) break;
      Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(ev.jacobian);
      rank_deficient = qr.rank() < fl.total;
      const Eigen::VectorXcd step = qr.solve(-ev.value);
      if (!step.allFinite()) break;
      // damping: halve until the defect norm decreases
      const double base_norm = ev.value.norm();
      double lambda = 1.0;
      bool moved = false;
      for (int h = 0; h <= cfg.max_halvings; ++h) {
        std::vector<CD> xt = x;
        for (int v = 0; v < fl.total; ++v)
          xt[static_cast<std::size_t>(v)] += lambda * step(v);
        const SystemEval et = evaluate(sys, fl, xt, false);
        if (et.value.norm() < base_norm) {
          x = std::move(xt);
          moved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!moved) break;
    }
    const SystemEval fin = evaluate(sys, fl, x, false);
    const double res = fin.value.cwiseAbs().maxCoeff();
    if (info && rank_deficient) ++info->rank_deficient;
    if (!(res < cfg.tol)) continue;
    if (info) ++info->converged;

    BAESolution sol;
    sol.roots = unflatten(sys, fl, x);
    sort_roots(sol.roots);
    sol.residual = res;
    sol.collision = fin.collision;
    for (const auto& col : sol.roots)
      for (std::size_t i = 0; i + 1 < col.size(); ++i)
        if (std::abs(col[i + 1] - col[i]) < 1e-8) sol.collision = true;

    const std::vector<CD> key = flat_sorted(sol.roots);
    bool duplicate = false;
    for (const BAESolution& other : found) {
      const std::vector<CD> ok = flat_sorted(other.roots);
      double dist = 0.0;
      for (std::size_t i = 0; i < key.size(); ++i)
        dist = std::max(dist, std::abs(key[i] - ok[i]));
      if (dist < cfg.dedup_tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(std::move(sol));
    if (static_cast<int>(found.size()) >= cfg.root_cap) break;
  }

  std::sort(found.begin(), found.end(),
            [](const BAESolution& a, const BAESolution& b) {
              const std::vector<CD> ka = flat_sorted(a.roots);
              const std::vector<CD> kb = flat_sorted(b.roots);
              for (std::size_t i = 0; i < ka.size(); ++i) {
                if (ka[i].real() != kb[i].real()) return ka[i].real() < kb[i].real();
                if (ka[i].imag() != kb[i].imag()) return ka[i].imag() < kb[i].imag();
              }
              return false;
            });
  return found;
}

BetheData<CD> to_bethe_data(const BAESystem& sys,
                            const std::vector<std::vector<CD>>& roots) {
  return BetheData<CD>(sys.g, roots, sys.inhom);
}

}  // namespace slbethe
