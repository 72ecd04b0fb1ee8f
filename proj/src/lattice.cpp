#include "cubature/lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>
#include <string>

namespace cub {

using IntRows = std::vector<std::vector<Int>>;

namespace {

IntRows to_int(const IntMatrix& m) {
  IntRows out;
  for (const auto& r : m) {
    std::vector<Int> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix to_long(const IntRows& m) {
  IntMatrix out;
  for (const auto& r : m) {
    std::vector<long> row;
    for (const auto& v : r) {
      if (!v.fits_slong_p()) throw std::overflow_error("lattice entry exceeds machine range");
      row.push_back(v.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// floor division for mpz
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix IntegerLattice::coord_basis() const {
  if (norm == TorusNorm::l1) return basis;
  IntMatrix out;
  for (const auto& k : basis) {
    std::vector<long> c(ambient - 1);
    long s = 0;
    for (int j = 0; j < ambient - 1; ++j) {
      s += k[j];
      c[j] = s;
    }
    out.push_back(c);
  }
  return out;
}

Int IntegerLattice::index() const {
  Int d = determinant(coord_basis());
  return abs(d);
}

void IntegerLattice::validate() const {
  if (ambient < (norm == TorusNorm::l1 ? 1 : 2)) throw std::invalid_argument("lattice ambient dimension too small");
  if (static_cast<int>(basis.size()) != rank())
    throw std::invalid_argument("lattice needs " + std::to_string(rank()) + " basis rows");
  for (const auto& r : basis) {
    if (static_cast<int>(r.size()) != ambient) throw std::invalid_argument("basis row length mismatch");
    if (norm == TorusNorm::an_root) {
      long s = 0;
      for (long v : r) s += v;
      if (s != 0) throw std::invalid_argument("an_root basis rows must have zero sum");
    }
  }
  if (determinant(coord_basis()) == 0) throw std::invalid_argument("lattice basis is singular");
}

nlohmann::json lattice_to_json(const IntegerLattice& lat) {
  return {{"ambient", lat.ambient}, {"norm", lat.norm == TorusNorm::l1 ? "l1" : "an_root"}, {"basis", lat.basis}};
}

IntegerLattice lattice_from_json(const nlohmann::json& j) {
  IntegerLattice lat;
  lat.ambient = j.at("ambient").get<int>();
  std::string n = j.value("norm", "l1");
  if (n != "l1" && n != "an_root") throw std::invalid_argument("unknown lattice norm " + n);
  lat.norm = n == "l1" ? TorusNorm::l1 : TorusNorm::an_root;
  lat.basis = j.at("basis").get<IntMatrix>();
  lat.validate();
  return lat;
}

Int determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntRows a = to_int(m);
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

IntRows hnf_int(IntRows a) {
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = row; i < a.size(); ++i)
        if (a[i][col] != 0 && (best == a.size() || abs(a[i][col]) < abs(a[best][col]))) best = i;
      if (best == a.size()) break;
      std::swap(a[row], a[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        Int q = floor_div(a[i][col], a[row][col]);
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& v : a[row]) v = -v;
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(a[i][col], a[row][col]);
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[row][j];
    }
    ++row;
  }
  a.resize(row);
  return a;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& rows) { return to_long(hnf_int(to_int(rows))); }

std::vector<Int> smith_normal_form(const IntMatrix& b, std::vector<std::vector<Int>>* vout) {
  IntRows a = to_int(b);
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("smith_normal_form needs a square matrix");
  IntRows v(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
  auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {  // col_j -= q col_k
    for (std::size_t i = 0; i < n; ++i) {
      a[i][j] -= q * a[i][k];
      v[i][j] -= q * v[i][k];
    }
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(a[i][j], a[i][k]);
      std::swap(v[i][j], v[i][k]);
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw std::invalid_argument("smith_normal_form: singular matrix");
      std::swap(a[k], a[pi]);
      col_swap(k, pj);
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        Int q = a[i][k] / a[k][k];
        if (q != 0)
          for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) done = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        Int q = a[k][j] / a[k][k];
        if (q != 0) col_op(j, k, q);
        if (a[k][j] != 0) done = false;
      }
      if (done) {
        for (std::size_t i = k + 1; i < n && done; ++i)
          for (std::size_t j = k + 1; j < n; ++j)
            if (a[i][j] % a[k][k] != 0) {
              for (std::size_t c = k; c < n; ++c) a[k][c] += a[i][c];
              done = false;
              break;
            }
      }
      if (done) break;
    }
    if (a[k][k] < 0)
      for (auto& x : a[k]) x = -x;
  }
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
  if (vout) *vout = std::move(v);
  return d;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

long next_prime_above(long bound) {
  long p = std::max(2L, bound + 1);
  while (!is_prime(p)) ++p;
  return p;
}

namespace {

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * a % p);
    a = static_cast<long>(static_cast<__int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

long inverse_mod(long a, long p) { return powmod(a, p - 2, p); }

// Basis (rows) of {x in Z^r : M x = 0 mod p}, M given as t x r.
IntMatrix kernel_lattice(std::vector<std::vector<long>> m, long p, int r) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < r && row < m.size(); ++col) {
    std::size_t s = row;
    while (s < m.size() && mod(m[s][col], p) == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[row], m[s]);
    long inv = inverse_mod(m[row][col], p);
    for (auto& x : m[row]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row) continue;
      long f = mod(m[i][col], p);
      if (f == 0) continue;
      for (int j = 0; j < r; ++j) m[i][j] = mod(m[i][j] - f * m[row][j], p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(r, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  IntMatrix basis;
  for (int f = 0; f < r; ++f) {
    if (is_pivot[f]) continue;
    std::vector<long> x(r, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = mod(-m[i][f], p);
    basis.push_back(x);
  }
  for (int c : pivot_col) {
    std::vector<long> x(r, 0);
    x[c] = p;
    basis.push_back(x);
  }
  return hermite_normal_form(basis);
}

std::vector<long> default_index_set(long first, int count) {
  std::vector<long> s;
  for (int i = 0; i < count; ++i) s.push_back(first + i);
  return s;
}

void check_index_set(const std::vector<long>& set, long p) {
  std::vector<long> r;
  for (long a : set) r.push_back(mod(a, p));
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end())
    throw std::invalid_argument("index set has repeated residues mod p");
}

}  // namespace

IntegerLattice craig_lattice_An(int n, int t, long p, std::vector<long> set) {
  if (n < 1 || t < 1) throw std::invalid_argument("craig_lattice_An needs n, t >= 1");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p < n + 1 || p <= t) throw std::invalid_argument("craig_lattice_An needs p >= n+1 and p > t");
  if (set.empty()) set = default_index_set(0, n + 1);
  if (static_cast<int>(set.size()) != n + 1) throw std::invalid_argument("index set must have n+1 elements");
  check_index_set(set, p);
  // root coordinates c_0..c_{n-1}; k_a = c_a - c_{a-1}, so the coefficient of
  // c_j is phi(N_j) - phi(N_{j+1})
  std::vector<std::vector<long>> m(t, std::vector<long>(n));
  for (int e = 1; e <= t; ++e)
    for (int j = 0; j < n; ++j) m[e - 1][j] = mod(powmod(set[j], e, p) - powmod(set[j + 1], e, p), p);
  IntMatrix c = kernel_lattice(m, p, n);
  IntegerLattice lat;
  lat.ambient = n + 1;
  lat.norm = TorusNorm::an_root;
  for (const auto& row : c) {
    std::vector<long> k(n + 1);
    long prev = 0;
    for (int j = 0; j < n; ++j) {
      k[j] = row[j] - prev;
      prev = row[j];
    }
    k[n] = -prev;
    lat.basis.push_back(k);
  }
  lat.validate();
  return lat;
}

IntegerLattice craig_lattice_Zn(int n, int t, long p, bool boost_even, std::vector<long> set) {
  if (n < 1 || t < 1) throw std::invalid_argument("craig_lattice_Zn needs n, t >= 1");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p <= 2L * n || p <= 2L * t) throw std::invalid_argument("craig_lattice_Zn needs p > max(2n, 2t)");
  if (set.empty()) set = default_index_set(1, n);
  if (static_cast<int>(set.size()) != n) throw std::invalid_argument("index set must have n elements");
  {
    std::vector<long> both = set;
    for (long a : set) both.push_back(-a);
    check_index_set(both, p);  // N and -N disjoint
  }
  std::vector<std::vector<long>> m(t, std::vector<long>(n));
  for (int e = 0; e < t; ++e)
    for (int j = 0; j < n; ++j) m[e][j] = powmod(set[j], 2 * e + 1, p);
  IntegerLattice lat;
  lat.ambient = n;
  lat.norm = TorusNorm::l1;
  lat.basis = kernel_lattice(m, p, n);
  if (boost_even) {
    auto odd = [](const std::vector<long>& r) {
      long s = 0;
      for (long v : r) s += v;
      return (s & 1) != 0;
    };
    int o = -1;
    for (int i = 0; i < n; ++i)
      if (odd(lat.basis[i])) {
        o = i;
        break;
      }
    if (o >= 0) {
      for (int i = 0; i < n; ++i)
        if (i != o && odd(lat.basis[i]))
          for (int j = 0; j < n; ++j) lat.basis[i][j] -= lat.basis[o][j];
      for (auto& v : lat.basis[o]) v *= 2;
      lat.basis = hermite_normal_form(lat.basis);
    }
  }
  lat.validate();
  return lat;
}

int torus_norm(TorusNorm norm, const std::vector<long>& c) {
  long s = 0;
  if (norm == TorusNorm::l1) {
    for (long v : c) s += std::labs(v);
  } else {
    long prev = 0;
    for (long v : c) {
      s += std::max(v - prev, 0L);
      prev = v;
    }
    s += std::max(-prev, 0L);
  }
  return static_cast<int>(s);
}

namespace {

struct Searcher {
  IntMatrix h;  // upper triangular, torus coordinates
  TorusNorm norm;
  int r;
  int best;
  std::vector<long> best_c;
  std::vector<long> u, c;

  // partial sums of coordinate j from rows < j
  long partial(int j) const {
    long s = 0;
    for (int i = 0; i < j; ++i) s += u[i] * h[i][j];
    return s;
  }

  void leaf(bool nonzero, int used_pos, int used_neg) {
    if (!nonzero) return;
    int val;
    if (norm == TorusNorm::l1) {
      val = used_pos;
    } else {
      long last = -c[r - 1];
      int p = used_pos + static_cast<int>(std::max(last, 0L));
      int q = used_neg + static_cast<int>(std::max(-last, 0L));
      if (p != q) return;  // cannot happen for zero-sum vectors
      val = p;
    }
    if (val < best) {
      best = val;
      best_c = c;
    }
  }

  void rec(int j, bool nonzero, int used_pos, int used_neg) {
    if (j == r) {
      leaf(nonzero, used_pos, used_neg);
      return;
    }
    const long s = partial(j), d = h[j][j];
    const int budget = best - 1;
    long lo, hi;  // range for c_j
    if (norm == TorusNorm::l1) {
      long rem = budget - used_pos;
      if (rem < 0) return;
      lo = -rem;
      hi = rem;
    } else {
      long prev = j ? c[j - 1] : 0;
      lo = prev - (budget - used_neg);
      hi = prev + (budget - used_pos);
      if (lo > hi) return;
    }
    // c_j = s + u_j d
    long ulo = static_cast<long>(floor_div(Int(lo - s) + d - 1, Int(d)).get_si());
    long uhi = static_cast<long>(floor_div(Int(hi - s), Int(d)).get_si());
    if (!nonzero) ulo = std::max(ulo, 0L);  // v ~ -v
    for (long uj = ulo; uj <= uhi; ++uj) {
      u[j] = uj;
      c[j] = s + uj * d;
      int p = used_pos, q = used_neg;
      if (norm == TorusNorm::l1) {
        p += static_cast<int>(std::labs(c[j]));
        if (p > best - 1) continue;
      } else {
        long step = c[j] - (j ? c[j - 1] : 0);
        p += static_cast<int>(std::max(step, 0L));
        q += static_cast<int>(std::max(-step, 0L));
        if (p > best - 1 || q > best - 1) continue;
      }
      rec(j + 1, nonzero || uj != 0, p, q);
    }
    u[j] = 0;
    c[j] = 0;
  }
};

}  // namespace

MinDistance min_distance(const IntegerLattice& lat, int cap) {
  lat.validate();
  if (cap < 1) throw std::invalid_argument("min_distance cap must be >= 1");
  IntMatrix h = hermite_normal_form(lat.coord_basis());
  const int r = lat.rank();
  MinDistance out;
  int best = cap + 1;
  std::vector<long> best_c;
  // split the search over the first coordinate's multiplier
  const long d0 = h[0][0];
  const long umax = cap / d0;
#pragma omp parallel for schedule(dynamic, 1)
  for (long u0 = 0; u0 <= umax; ++u0) {
    Searcher s{h, lat.norm, r, cap + 1, {}, std::vector<long>(r, 0), std::vector<long>(r, 0)};
    int seen;
#pragma omp atomic read
    seen = best;
    s.best = seen;
    s.u[0] = u0;
    s.c[0] = u0 * d0;
    int p, q;
    if (lat.norm == TorusNorm::l1) {
      p = static_cast<int>(std::labs(s.c[0]));
      q = 0;
    } else {
      p = static_cast<int>(std::max(s.c[0], 0L));
      q = static_cast<int>(std::max(-s.c[0], 0L));
    }
    if (p > s.best - 1 || q > s.best - 1) continue;
    if (r == 1) {
      s.leaf(u0 != 0, p, q);
    } else {
      s.rec(1, u0 != 0, p, q);
    }
#pragma omp critical(min_distance_merge)
    if (s.best < best || (s.best == best && !s.best_c.empty() && (best_c.empty() || s.best_c < best_c))) {
      best = s.best;
      best_c = s.best_c;
    }
  }
  if (best > cap) {
    out.exceeded = true;
    return out;
  }
  out.value = best;
  out.witness = best_c;
  return out;
}

bool contains(const IntegerLattice& lat, const std::vector<long>& c) {
  IntMatrix h = hermite_normal_form(lat.coord_basis());
  const int r = lat.rank();
  if (static_cast<int>(c.size()) != r) throw std::invalid_argument("vector length does not match the lattice rank");
  std::vector<long> rest(c);
  for (int j = 0; j < r; ++j) {
    if (rest[j] % h[j][j] != 0) return false;
    long u = rest[j] / h[j][j];
    for (int k = j; k < r; ++k) rest[k] -= u * h[j][k];
  }
  return true;
}

int min_distance_by_ball(const IntegerLattice& lat, int radius) {
  lat.validate();
  IntMatrix h = hermite_normal_form(lat.coord_basis());
  const int r = lat.rank();
  int best = -1;
  std::vector<long> c(r, 0);
  auto member = [&]() {
    std::vector<long> rest(c);
    for (int j = 0; j < r; ++j) {
      if (rest[j] % h[j][j] != 0) return false;
      long u = rest[j] / h[j][j];
      for (int k = j; k < r; ++k) rest[k] -= u * h[j][k];
    }
    return true;
  };
  std::function<void(int, bool)> rec = [&](int j, bool nonzero) {
    if (j == r) {
      if (!nonzero) return;
      int nv = torus_norm(lat.norm, c);
      if (nv <= radius && (best < 0 || nv < best) && member()) best = nv;
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      c[j] = v;
      // prune by the norm of the prefix
      std::vector<long> pre(c.begin(), c.begin() + j + 1);
      int pn;
      if (lat.norm == TorusNorm::l1) {
        pn = torus_norm(lat.norm, pre);
      } else {
        long pos = 0, neg = 0, prev = 0;
        for (long x : pre) {
          pos += std::max(x - prev, 0L);
          neg += std::max(prev - x, 0L);
          prev = x;
        }
        pn = static_cast<int>(std::max(pos, neg));
      }
      if (pn > radius) continue;
      rec(j + 1, nonzero || v != 0);
    }
    c[j] = 0;
  };
  rec(0, false);
  return best;
}

int design_degree_structural(const IntegerLattice& lat, int t_max) {
  MinDistance d = min_distance(lat, t_max + 1);
  if (d.exceeded)
    throw std::runtime_error("minimum distance exceeds the cap " + std::to_string(t_max + 1) +
                             "; structural degree is at least " + std::to_string(t_max + 1));
  return d.value - 1;
}

ExactScalar hight_bound(int n, int d, const ExactScalar& density, const ExactScalar& volK) {
  if (!(density > ExactScalar(0)) || density > ExactScalar(1)) throw std::invalid_argument("density must lie in (0,1]");
  if (!(volK > ExactScalar(0))) throw std::invalid_argument("volK must be positive");
  Int dn, twon;
  mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  mpz_ui_pow_ui(twon.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return ExactScalar(frac(dn, twon)) * volK / density;
}

}  // namespace cub
