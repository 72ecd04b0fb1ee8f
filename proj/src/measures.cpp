#include "cubature/measures.hpp"

#include <stdexcept>

namespace cub {

SpaceDescriptor SpaceDescriptor::torus(int n, TorusNorm norm) {
  SpaceDescriptor s = make(SpaceKind::trig_torus, n);
  s.torus_norm = norm;
  return s;
}

SpaceDescriptor SpaceDescriptor::jacobi(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("jacobi parameters must be > -1");
  SpaceDescriptor s = make(SpaceKind::jacobi_interval, 1);
  s.a = a;
  s.b = b;
  return s;
}

SpaceDescriptor SpaceDescriptor::tabulated(std::vector<Rat> m, Rat lo, Rat hi) {
  if (m.empty() || m[0] == 0) throw std::invalid_argument("tabulated moments need a nonzero mass");
  SpaceDescriptor s = make(SpaceKind::moment_interval, 1);
  s.moments = std::make_shared<const std::vector<Rat>>(std::move(m));
  s.lo = lo;
  s.hi = hi;
  return s;
}

int SpaceDescriptor::coord_count() const {
  switch (kind) {
    case SpaceKind::simplex: return dim + 1;
    case SpaceKind::jacobi_interval:
    case SpaceKind::moment_interval: return 1;
    default: return dim;
  }
}

bool SpaceDescriptor::sign_symmetric(int) const {
  switch (kind) {
    case SpaceKind::sphere:
    case SpaceKind::ball:
    case SpaceKind::gaussian: return true;
    case SpaceKind::jacobi_interval: return a == b;
    default: return false;
  }
}

bool SpaceDescriptor::permutation_symmetric() const {
  switch (kind) {
    case SpaceKind::jacobi_interval:
    case SpaceKind::moment_interval: return false;
    case SpaceKind::trig_torus: return torus_norm == TorusNorm::l1;
    default: return true;
  }
}

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::simplex: return "simplex";
    case SpaceKind::corner_simplex: return "corner_simplex";
    case SpaceKind::sphere: return "sphere";
    case SpaceKind::ball: return "ball";
    case SpaceKind::trig_torus: return "trig_torus";
    case SpaceKind::gaussian: return "gaussian";
    case SpaceKind::exponential_orthant: return "exponential_orthant";
    case SpaceKind::jacobi_interval: return "jacobi_interval";
    case SpaceKind::moment_interval: return "moment_interval";
  }
  return "?";
}

SpaceKind kind_from_name(const std::string& s) {
  for (SpaceKind k : {SpaceKind::simplex, SpaceKind::corner_simplex, SpaceKind::sphere, SpaceKind::ball,
                      SpaceKind::trig_torus, SpaceKind::gaussian, SpaceKind::exponential_orthant,
                      SpaceKind::jacobi_interval, SpaceKind::moment_interval})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown space kind: " + s);
}

std::string SpaceDescriptor::name() const {
  std::string s = kind_name(kind) + "(" + std::to_string(dim);
  if (kind == SpaceKind::jacobi_interval) s += "," + std::to_string(a) + "," + std::to_string(b);
  if (kind == SpaceKind::trig_torus && torus_norm == TorusNorm::an_root) s += ",an_root";
  return s + ")";
}

bool operator==(const SpaceDescriptor& x, const SpaceDescriptor& y) {
  if (x.kind != y.kind || x.dim != y.dim) return false;
  if (x.kind == SpaceKind::jacobi_interval) return x.a == y.a && x.b == y.b;
  if (x.kind == SpaceKind::trig_torus) return x.torus_norm == y.torus_norm;
  if (x.kind == SpaceKind::moment_interval) return x.moments == y.moments || (x.moments && y.moments && *x.moments == *y.moments);
  return true;
}

std::vector<Rat> jacobi_moments(int a, int b, int kmax) {
  // u = (1+x)/2 has a Beta(b+1, a+1) law; E[u^j] = prod (b+1+i)/(a+b+2+i).
  std::vector<Rat> mu(kmax + 1);
  mu[0] = 1;
  for (int j = 1; j <= kmax; ++j) mu[j] = mu[j - 1] * frac(b + j, a + b + 1 + j);
  std::vector<Rat> m(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    Rat s = 0;
    for (int j = 0; j <= k; ++j) {
      Rat term = Rat(binomial(k, j)) * Rat(Int(1) << j) * mu[j];
      if ((k - j) % 2) s -= term;
      else s += term;
    }
    m[k] = s;
  }
  return m;
}

namespace {

void check_len(const SpaceDescriptor& s, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != s.coord_count())
    throw std::invalid_argument("exponent length " + std::to_string(a.size()) + " does not match " + s.name());
  if (!s.is_torus())
    for (int e : a)
      if (e < 0) throw std::invalid_argument("negative monomial exponent");
}

Rat dirichlet(int n, const ExponentVector& a) {
  Int num = factorial(n);
  long tot = 0;
  for (int e : a) {
    num *= factorial(e);
    tot += e;
  }
  return frac(num, factorial(n + tot));
}

Rat sphere_moment(int n, const ExponentVector& a) {
  Int num = 1;
  long tot = 0;
  for (int e : a) {
    if (e % 2) return 0;
    num *= double_factorial(e - 1);
    tot += e;
  }
  Int den = 1;
  for (long j = 0; j < tot / 2; ++j) den *= n + 2 * j;
  return frac(num, den);
}

}  // namespace

Rat moment(const SpaceDescriptor& s, const ExponentVector& alpha) {
  check_len(s, alpha);
  switch (s.kind) {
    case SpaceKind::simplex:
    case SpaceKind::corner_simplex: return dirichlet(s.dim, alpha);
    case SpaceKind::sphere: return sphere_moment(s.dim, alpha);
    case SpaceKind::ball: return sphere_moment(s.dim, alpha) * frac(s.dim, s.dim + monomial_degree(alpha));
    case SpaceKind::gaussian: {
      Rat r = 1;
      for (int e : alpha) {
        if (e % 2) return 0;
        r *= frac(double_factorial(e - 1), Int(1) << (e / 2));
      }
      return r;
    }
    case SpaceKind::exponential_orthant: {
      Int r = 1;
      for (int e : alpha) r *= factorial(e);
      return Rat(r);
    }
    case SpaceKind::jacobi_interval: return jacobi_moments(s.a, s.b, alpha[0]).back();
    case SpaceKind::moment_interval:
      if (alpha[0] >= static_cast<int>(s.moments->size()))
        throw std::invalid_argument("moment index beyond the tabulated range");
      return (*s.moments)[alpha[0]] / (*s.moments)[0];
    case SpaceKind::trig_torus: return trig_moment(alpha);
  }
  throw std::invalid_argument("unsupported space");
}

Rat trig_moment(const ExponentVector& k) {
  for (int e : k)
    if (e != 0) return 0;
  return 1;
}

int an_root_norm(const ExponentVector& k) {
  int pos = 0, sum = 0;
  for (int e : k) {
    sum += e;
    if (e > 0) pos += e;
  }
  if (sum != 0) throw std::invalid_argument("an_root norm needs a zero-sum vector");
  return pos;
}

int an_root_norm_from_root_coords(const ExponentVector& c) {
  // k_1 = c_1, k_j = c_j - c_{j-1}, k_m = -c_{m-1}
  int pos = 0, prev = 0;
  for (int v : c) {
    int k = v - prev;
    if (k > 0) pos += k;
    prev = v;
  }
  if (-prev > 0) pos += -prev;
  return pos;
}

}  // namespace cub
