#include "cubature/bounds.hpp"

#include "cubature/orthopoly.hpp"
#include "cubature/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cub {

namespace {

void require_degree(const Formula& f, int degree, double tol) {
  VerifyOptions o;
  if (!f.is_exact()) {
    o.mode = VerifyMode::floating;
    o.tol = tol;
    o.eval_bits = f.space.coord_count() == 1 ? kDefaultPrecision : 64;
  }
  if (!verify(f, degree, o).pass) throw std::invalid_argument("formula fails its degree-" + std::to_string(degree) + " claim");
}

bool is_interval(const SpaceDescriptor& s) {
  return s.kind == SpaceKind::jacobi_interval || s.kind == SpaceKind::moment_interval;
}

}  // namespace

SharpReport sharp_check(const Formula& f, int degree, double tol) {
  f.validate();
  if (!is_interval(f.space)) throw std::invalid_argument("sharp_check needs an interval measure");
  for (const auto& w : f.weights)
    if (w.sign() <= 0) throw std::invalid_argument("sharp_check needs positive weights");
  require_degree(f, degree, tol);
  SharpReport r;
  r.degree = degree;
  r.k = (degree + 1) / 2;
  if (r.k < 1) return r;
  Formula g = gauss_quadrature(f.space, r.k);
  std::vector<std::pair<BigFloat, BigFloat>> gw;
  for (std::size_t i = 0; i < g.size(); ++i) gw.emplace_back(g.points[i][0].to_bigfloat(), g.weights[i].to_bigfloat());
  std::sort(gw.begin(), gw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [x, w] : gw) {
    r.gauss_nodes.push_back(x);
    r.gauss_weights.push_back(w);
  }
  std::vector<std::pair<BigFloat, BigFloat>> pts;
  for (std::size_t i = 0; i < f.size(); ++i) pts.emplace_back(f.points[i][0].to_bigfloat(), f.weights[i].to_bigfloat());
  const BigFloat eps("1e-40");
  const auto& p = r.gauss_nodes;
  const int k = r.k;
  for (int j = 0; j < k; ++j) {
    // (p_{j-1}, p_j] and [p_j, p_{j+1})
    bool left = false, right = false;
    for (const auto& [x, w] : pts) {
      if ((j == 0 || x > p[j - 1] + eps) && x <= p[j] + eps) left = true;
      if (x >= p[j] - eps && (j == k - 1 || x < p[j + 1] - eps)) right = true;
    }
    if (!left) {
      r.occupancy = false;
      r.violations.push_back("no point in (p_" + std::to_string(j) + ", p_" + std::to_string(j + 1) + "]");
    }
    if (!right) {
      r.occupancy = false;
      r.violations.push_back("no point in [p_" + std::to_string(j + 1) + ", p_" + std::to_string(j + 2) + ")");
    }
  }
  for (const auto& [x, w] : pts) {
    if (x <= p.front() + eps) r.left_tail += w;
    if (x >= p.back() - eps) r.right_tail += w;
  }
  const BigFloat btol(tol);
  if (r.left_tail > r.gauss_weights.front() + btol) {
    r.tail = false;
    r.violations.push_back("left tail weight exceeds w_1");
  }
  if (r.right_tail > r.gauss_weights.back() + btol) {
    r.tail = false;
    r.violations.push_back("right tail weight exceeds w_k");
  }
  r.left_equality = abs(r.left_tail - r.gauss_weights.front()) <= btol;
  return r;
}

Formula perturbed_positive_rule(const SpaceDescriptor& measure, int degree, std::uint64_t seed) {
  if (!is_interval(measure)) throw std::invalid_argument("perturbed_positive_rule needs an interval measure");
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  // both Gauss rules exact to degree 2k-1 >= degree
  const int k = degree / 2 + 1;
  const int m = k + 1 + static_cast<int>(rng() % 2);
  Formula a = gauss_quadrature(measure, k), b = gauss_quadrature(measure, m);
  const BigFloat lambda(0.15 + 0.7 * unif(rng));
  std::vector<BigFloat> x, w;
  for (std::size_t i = 0; i < a.size(); ++i) {
    x.push_back(a.points[i][0].to_bigfloat());
    w.push_back(lambda * a.weights[i].to_bigfloat());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    x.push_back(b.points[i][0].to_bigfloat());
    w.push_back((1 - lambda) * b.weights[i].to_bigfloat());
  }
  const int N = static_cast<int>(x.size()), R = degree + 1;
  // row-reduce the moment matrix V[j][i] = x_i^j
  std::vector<std::vector<BigFloat>> V(R, std::vector<BigFloat>(N));
  for (int i = 0; i < N; ++i) {
    BigFloat p = 1;
    for (int j = 0; j < R; ++j) {
      V[j][i] = p;
      p *= x[i];
    }
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < N && row < R; ++c) {
    int best = row;
    for (int r2 = row + 1; r2 < R; ++r2)
      if (abs(V[r2][c]) > abs(V[best][c])) best = r2;
    if (abs(V[best][c]) < BigFloat("1e-60")) continue;
    std::swap(V[row], V[best]);
    BigFloat piv = V[row][c];
    for (int cc = 0; cc < N; ++cc) V[row][cc] /= piv;
    for (int r2 = 0; r2 < R; ++r2)
      if (r2 != row && V[r2][c] != 0) {
        BigFloat fct = V[r2][c];
        for (int cc = 0; cc < N; ++cc) V[r2][cc] -= fct * V[row][cc];
      }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(N, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<BigFloat> v(N, BigFloat(0));
  for (int c = 0; c < N; ++c) {
    if (is_pivot[c]) continue;
    BigFloat coef(gauss(rng));
    v[c] += coef;
    for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2) v[pivot_col[r2]] -= coef * V[r2][c];
  }
  BigFloat amax = -1;
  for (int i = 0; i < N; ++i)
    if (v[i] < 0) {
      BigFloat lim = w[i] / -v[i];
      if (amax < 0 || lim < amax) amax = lim;
    }
  if (amax > 0) {
    BigFloat alpha = amax * BigFloat(0.2 + 0.6 * unif(rng));
    for (int i = 0; i < N; ++i) w[i] += alpha * v[i];
  }
  Formula f;
  f.space = measure;
  for (int i = 0; i < N; ++i) {
    f.points.push_back({ExactScalar::bigfloat(x[i])});
    f.weights.push_back(ExactScalar::bigfloat(w[i]));
  }
  f.claimed_degree = degree;
  f.provenance = "perturbed Gauss mixture, seed " + std::to_string(seed);
  return f;
}

BigFloat simplex_distance(const ScalarVec& p, const ScalarVec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("barycentric points of different lengths");
  BigFloat s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += sqrt(p[i].to_bigfloat() * q[i].to_bigfloat());
  if (s > 1) s = 1;
  return acos(s);
}

double simplex_distance(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
  return std::acos(std::min(1.0, s));
}

BigFloat epsnet_radius(int n, int t) {
  auto z = jacobi_zeros(n - 1, 0, t);
  BigFloat hi = *std::max_element(z.begin(), z.end());
  return acos(hi) / 2;
}

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (i) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

EpsNetReport epsnet_check(const Formula& f, int degree, std::size_t samples, std::uint64_t seed) {
  f.validate();
  if (f.space.kind == SpaceKind::corner_simplex) {
    // same measure as the simplex once the implicit coordinate is restored
    Formula g = f;
    g.space = SpaceDescriptor::simplex(f.space.dim);
    for (auto& p : g.points) {
      ExactScalar rest(1);
      for (const auto& x : p) rest -= x;
      p.insert(p.begin(), rest);
    }
    return epsnet_check(g, degree, samples, seed);
  }
  if (f.space.kind != SpaceKind::simplex) throw std::invalid_argument("epsnet_check needs a simplex formula");
  Classification c = classify(f);
  if (!c.positive || c.exterior) throw std::invalid_argument("epsnet_check needs a PI or PB formula");
  require_degree(f, degree, 1e-9);
  const int n = f.space.dim;
  EpsNetReport r;
  r.t = (degree + 1) / 2;
  r.samples = samples;
  auto z = jacobi_zeros(n - 1, 0, r.t);
  r.highest_zero = *std::max_element(z.begin(), z.end());
  r.epsilon = acos(r.highest_zero) / 2;
  std::vector<std::vector<double>> roots;
  for (const auto& p : f.points) {
    std::vector<double> q;
    for (const auto& x : p) q.push_back(std::sqrt(std::max(0.0, x.to_double())));
    roots.push_back(std::move(q));
  }
  static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                    53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  if (n + 1 > static_cast<int>(std::size(primes))) throw std::invalid_argument("simplex dimension too large for sampling");
  double worst = 0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> y(n + 1);
    double tot = 0;
    for (int i = 0; i <= n; ++i) {
      double u = radical_inverse(seed + s + 1, primes[i]);
      y[i] = -std::log(std::max(u, 1e-300));
      tot += y[i];
    }
    for (auto& v : y) v = std::sqrt(v / tot);
    double best = 10;
    for (const auto& q : roots) {
      double dot = 0;
      for (int i = 0; i <= n; ++i) dot += y[i] * q[i];
      best = std::min(best, std::acos(std::min(1.0, dot)));
    }
    worst = std::max(worst, best);
  }
  r.worst = worst;
  r.covered = worst <= r.epsilon.convert_to<double>();
  return r;
}

ChristoffelTable christoffel_scaling(int n, const std::vector<int>& ts) {
  if (n < 1) throw std::invalid_argument("christoffel_scaling needs n >= 1");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] <= ts[i - 1]) throw std::invalid_argument("t list must be increasing");
  ChristoffelTable tab;
  tab.n = n;
  for (int t : ts) {
    Formula g = gauss_quadrature(SpaceDescriptor::jacobi(n - 1, 0), t);
    std::size_t hi = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (g.points[hi][0] < g.points[i][0]) hi = i;
    tab.t.push_back(t);
    tab.weight.push_back(g.weights[hi].to_bigfloat());
  }
  auto fit = [&](double shift) {
    const std::size_t m = ts.size();
    if (m < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double lx = std::log(tab.t[i] + shift);
      double ly = static_cast<double>(log(tab.weight[i]));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
  };
  tab.slope = fit(0);
  tab.shifted_slope = fit(n / 2.0);
  return tab;
}

}  // namespace cub
