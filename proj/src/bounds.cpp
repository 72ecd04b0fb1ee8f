#include "cubature/bounds.hpp"

#include "cubature/lattice.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace cub {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
    return h;
  }
};

// all k in Z_{>=0}^{m} with sum s
std::vector<std::vector<int>> compositions(int m, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (m > 0) rec(0, s);
  return out;
}

double to_d(const Int& x) { return x.get_d(); }

BoundReport report(const std::string& name, const SpaceDescriptor& sp, int degree, const Int& value,
                   std::optional<std::size_t> size) {
  BoundReport r;
  r.name = name;
  r.space = sp.name();
  r.degree = degree;
  r.value = value;
  r.formula_size = size;
  if (size) r.slack = static_cast<double>(*size) / to_d(value);
  return r;
}

}  // namespace

Int l1_ball_count(int n, int r) {
  Int s = 0;
  for (int k = 0; k <= std::min(n, r); ++k) s += binomial(n, k) * binomial(r, k) * (Int(1) << k);
  return s;
}

Int l1_parity_count(int n, int r) {
  // shells of radius j hold sum_k C(n,k) C(j-1,k-1) 2^k points
  Int s = 0;
  for (int j = r; j >= 0; j -= 2) {
    if (j == 0) {
      s += 1;
      continue;
    }
    for (int k = 1; k <= std::min(n, j); ++k) s += binomial(n, k) * binomial(j - 1, k - 1) * (Int(1) << k);
  }
  return s;
}

Int an_root_ball_count(int n, int r) {
  const int N = n + 1;
  Int s = 1;
  for (int j = 1; j <= r; ++j)
    for (int a = 1; a <= std::min(N, j); ++a)
      for (int b = 1; a + b <= N && b <= j; ++b)
        s += binomial(N, a) * binomial(N - a, b) * binomial(j - 1, a - 1) * binomial(j - 1, b - 1);
  return s;
}

Int stroud_bound(const SpaceDescriptor& sp, int two_t) {
  if (two_t < 0 || two_t % 2) throw std::invalid_argument("stroud_bound needs an even degree 2t");
  const int t = two_t / 2, n = sp.dim;
  switch (sp.kind) {
    case SpaceKind::simplex:
    case SpaceKind::corner_simplex:
    case SpaceKind::ball:
    case SpaceKind::gaussian:
    case SpaceKind::exponential_orthant: return binomial(n + t, n);
    case SpaceKind::sphere: return binomial(n + t - 1, t) + (t >= 1 ? binomial(n + t - 2, t - 1) : Int(0));
    case SpaceKind::jacobi_interval:
    case SpaceKind::moment_interval: return Int(t + 1);
    case SpaceKind::trig_torus:
      return sp.torus_norm == TorusNorm::l1 ? l1_ball_count(n, t) : an_root_ball_count(n, t);
  }
  throw std::invalid_argument("unsupported space");
}

Int moller_sphere_bound(int n, int degree) {
  if (degree < 1 || degree % 2 == 0) throw std::invalid_argument("Moller bound needs an odd degree");
  const int t = (degree - 1) / 2;
  return 2 * binomial(n - 1 + t, t);
}

Int cpn_bound(int n, int t) { return binomial(n + t, n) * binomial(n + t + 1, n); }

Int psu_torus_bound(int n, int t, std::size_t cap) {
  if (n < 1 || t < 0) throw std::invalid_argument("psu_torus_bound needs n >= 1, t >= 0");
  const int a = (t + 1) / 2, b = t / 2;
  auto A = compositions(n + 1, a), B = compositions(n + 1, b);
  if (static_cast<double>(A.size()) * static_cast<double>(B.size()) > static_cast<double>(cap))
    throw std::runtime_error("Minkowski difference enumeration exceeds cap");
  std::unordered_set<std::vector<int>, VecHash> diff;
  std::vector<int> d(n + 1);
  for (const auto& x : A)
    for (const auto& y : B) {
      for (int i = 0; i <= n; ++i) d[i] = x[i] - y[i];
      diff.insert(d);
    }
  return Int(static_cast<unsigned long>(diff.size()));
}

double psu_torus_asymptotic(int n, int t) {
  return std::pow(static_cast<double>(n), t) / (std::tgamma((t + 1) / 2 + 1.0) * std::tgamma(t / 2 + 1.0));
}

BoundReport stroud_mysovskikh_check(int n, int degree, std::optional<std::size_t> size) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const SpaceDescriptor sp = SpaceDescriptor::torus(n);
  const int t = degree / 2;
  BoundReport r;
  if (degree % 2 == 0) {
    r = report("stroud_mysovskikh", sp, degree, l1_ball_count(n, t), size);
    r.asymptotic = std::pow(2.0 * n, t) / std::tgamma(t + 1.0);
  } else {
    r = report("stroud_mysovskikh_moller", sp, degree, 2 * l1_parity_count(n, t), size);
    r.asymptotic = 2 * std::pow(2.0 * n, t) / std::tgamma(t + 1.0);
  }
  // lattice packing densities of the cross polytope: 1 for n <= 2, 18/19 for n = 3
  if (n >= 1 && n <= 3) {
    Rat density = n == 3 ? frac(18, 19) : Rat(1);
    Rat vol = frac(Int(1) << n, factorial(n));
    r.lattice_count = hight_bound(n, degree + 1, ExactScalar(density), ExactScalar(vol)).rational();
  }
  return r;
}

BoundReport cpn_check(int n, int t, std::size_t lines) {
  BoundReport r;
  r.name = "cpn";
  r.space = "CP^" + std::to_string(n);
  r.degree = 2 * t + 1;
  r.value = cpn_bound(n, t);
  r.formula_size = lines;
  r.slack = static_cast<double>(lines) / to_d(r.value);
  return r;
}

std::vector<BoundReport> applicable_bounds(const Formula& f, int degree) {
  std::vector<BoundReport> out;
  const std::size_t size = f.size();
  const auto& sp = f.space;
  out.push_back(report("stroud", sp, degree, stroud_bound(sp, 2 * (degree / 2)), size));
  if (sp.kind == SpaceKind::sphere && degree % 2) out.push_back(report("moller_sphere", sp, degree, moller_sphere_bound(sp.dim - 1, degree), size));
  if (sp.kind == SpaceKind::trig_torus) {
    if (sp.torus_norm == TorusNorm::l1) {
      BoundReport r = stroud_mysovskikh_check(sp.dim, degree, size);
      r.space = sp.name();
      out.push_back(r);
    } else {
      out.push_back(report("psu_torus", sp, degree, psu_torus_bound(sp.dim, degree), size));
    }
  }
  return out;
}

}  // namespace cub
