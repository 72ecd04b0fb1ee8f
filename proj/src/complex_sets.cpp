#include "cubature/complex_sets.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cub {

namespace {

using Coords = std::vector<long>;  // pairs (x, y) per complex coordinate
using Op = std::function<Coords(const Coords&)>;

std::vector<Coords> closure(const std::vector<Coords>& seeds, const std::vector<Op>& ops, std::size_t cap,
                            const std::function<bool(const Coords&)>& accept = nullptr) {
  std::set<Coords> seen;
  std::vector<Coords> order, frontier;
  for (const auto& s : seeds)
    if (seen.insert(s).second) {
      order.push_back(s);
      frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& v : frontier)
      for (const auto& op : ops) {
        Coords w = op(v);
        if (accept && !accept(w)) continue;
        if (seen.insert(w).second) {
          if (seen.size() > cap) throw std::runtime_error("vector closure exceeds cap");
          order.push_back(w);
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return order;
}

// x + y*omega -> (x - y/2, y*sqrt3/2)
ScalarVec eisenstein_real(const Coords& c) {
  ScalarVec out;
  for (std::size_t k = 0; k < c.size(); k += 2) {
    long x = c[k], y = c[k + 1];
    out.push_back(ExactScalar(frac(2 * x - y, 2)));
    out.push_back(ExactScalar::quadratic(Rat(0), frac(y, 2), 3));
  }
  return out;
}

ScalarVec plain_real(const Coords& c) {
  ScalarVec out;
  for (long v : c) out.push_back(ExactScalar(v));
  return out;
}

Op swap_coords(int i, int j) {
  return [i, j](const Coords& v) {
    Coords w = v;
    std::swap(w[2 * i], w[2 * j]);
    std::swap(w[2 * i + 1], w[2 * j + 1]);
    return w;
  };
}

// omega * (x + y omega) = -y + (x - y) omega
void times_omega(long& x, long& y) {
  long nx = -y, ny = x - y;
  x = nx;
  y = ny;
}

// i * (x + y i) = -y + x i
void times_i(long& x, long& y) {
  long nx = -y;
  y = x;
  x = nx;
}

}  // namespace

ComplexVectorSet e8_roots(E8Position pos) {
  ComplexVectorSet s;
  s.m = 4;
  if (pos == E8Position::real) {
    s.ring = Ring::real;
    s.name = "E8 roots (real position, doubled)";
    // +-2e_i +-2e_j and (+-1)^8 with an even number of minus signs
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int a : {2, -2})
          for (int b : {2, -2}) {
            Coords c(8, 0);
            c[i] = a;
            c[j] = b;
            s.vectors.push_back(plain_real(c));
          }
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      Coords c(8);
      for (int k = 0; k < 8; ++k) c[k] = (mask >> k) & 1 ? -1 : 1;
      s.vectors.push_back(plain_real(c));
    }
    s.norm2 = 8;
    return s;
  }
  std::vector<Op> ops;
  std::vector<Coords> seeds;
  if (pos == E8Position::eisenstein) {
    s.ring = Ring::eisenstein;
    s.name = "E8 roots (Eisenstein position)";
    seeds = {{1, 0, 1, 0, 1, 0, 0, 0}, {1, -1, 0, 0, 0, 0, 0, 0}};
    // Only the cyclic shifts of the first three coordinates: a transposition
    // there does not preserve the lattice and the orbit grows to 888 vectors.
    ops.push_back([](const Coords& v) { return Coords{v[2], v[3], v[4], v[5], v[0], v[1], v[6], v[7]}; });
    // (a,b,c,d) -> (d,a,-b,c)
    ops.push_back([](const Coords& v) {
      return Coords{v[6], v[7], v[0], v[1], -v[2], -v[3], v[4], v[5]};
    });
    for (int k = 0; k < 4; ++k)
      ops.push_back([k](const Coords& v) {
        Coords w = v;
        times_omega(w[2 * k], w[2 * k + 1]);
        return w;
      });
    auto raw = closure(seeds, ops, 1000000);
    for (const auto& c : raw) s.vectors.push_back(eisenstein_real(c));
    s.norm2 = 3;
  } else {
    s.ring = Ring::gaussian;
    s.name = "E8 roots (Gaussian position)";
    seeds = {{1, 0, 1, 0, 1, 0, 1, 0}, {2, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0, 0}};
    ops = {swap_coords(0, 1), swap_coords(1, 2), swap_coords(2, 3)};
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        ops.push_back([a, b](const Coords& v) {
          Coords w = v;
          times_i(w[2 * a], w[2 * a + 1]);
          times_i(w[2 * b], w[2 * b + 1]);
          return w;
        });
    auto raw = closure(seeds, ops, 1000000);
    for (const auto& c : raw) s.vectors.push_back(plain_real(c));
    s.norm2 = 4;
  }
  return s;
}

ComplexVectorSet k12_short_vectors() {
  ComplexVectorSet s;
  s.m = 6;
  s.ring = Ring::eisenstein;
  s.name = "K12 short vectors (3-base Eisenstein position)";
  std::vector<Coords> seeds = {{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}, {1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}};
  std::vector<Op> ops;
  for (int k = 0; k + 1 < 6; ++k) ops.push_back(swap_coords(k, k + 1));
  // omega at k, omega^-1 = omega^2 at k+1: exponents sum to 0 mod 3
  for (int k = 0; k + 1 < 6; ++k)
    ops.push_back([k](const Coords& v) {
      Coords w = v;
      times_omega(w[2 * k], w[2 * k + 1]);
      times_omega(w[2 * k + 2], w[2 * k + 3]);
      times_omega(w[2 * k + 2], w[2 * k + 3]);
      return w;
    });
  ops.push_back([](const Coords& v) {
    Coords w = v;
    for (auto& x : w) x = -x;
    return w;
  });
  auto raw = closure(seeds, ops, 1000000);
  for (const auto& c : raw) s.vectors.push_back(eisenstein_real(c));
  s.norm2 = 6;
  return s;
}

ComplexVectorSet bw16_short_vectors() {
  ComplexVectorSet s;
  s.m = 8;
  s.ring = Ring::gaussian;
  s.name = "Barnes-Wall short vectors";
  // coordinates indexed by (Z/2)^4; affine maps permute them
  auto perm_op = [](std::function<int(int)> f) {
    return Op([f](const Coords& v) {
      Coords w(16);
      for (int x = 0; x < 16; ++x) w[f(x)] = v[x];
      return w;
    });
  };
  std::vector<Op> ops;
  for (int k = 0; k < 4; ++k) ops.push_back(perm_op([k](int x) { return x ^ (1 << k); }));
  // transvections x -> x + x_j e_i generate GL(4,2)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) ops.push_back(perm_op([i, j](int x) { return ((x >> j) & 1) ? x ^ (1 << i) : x; }));
  for (int i = 0; i < 16; ++i) {
    ops.push_back([i](const Coords& v) {
      Coords w = v;
      w[i] = -w[i];
      return w;
    });
    for (int j = i + 1; j < 16; ++j)
      ops.push_back([i, j](const Coords& v) {
        Coords w = v;
        w[i] = -w[i];
        w[j] = -w[j];
        return w;
      });
  }
  auto sum_ok = [](const Coords& v) {
    long t = 0;
    for (long x : v) t += x;
    return t % 4 == 0;
  };
  Coords a(16, 0), b(16, 0);
  for (int k = 0; k < 8; ++k) a[k] = 1;
  b[0] = b[1] = 2;
  auto raw = closure({a, b}, ops, 1000000, sum_ok);
  for (const auto& c : raw) s.vectors.push_back(plain_real(c));
  s.norm2 = 8;
  return s;
}

bool is_odd_prime(long q) {
  if (q < 3 || q % 2 == 0) return false;
  for (long d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

ComplexVectorSet mub_design(int q) {
  if (!is_odd_prime(q)) throw std::invalid_argument("mub_design needs an odd prime q");
  ComplexVectorSet s;
  s.m = q;
  s.ring = q == 3 ? Ring::eisenstein : Ring::cyclotomic;
  s.name = "MUB lines, q=" + std::to_string(q);
  for (int k = 0; k < q; ++k) {
    ScalarVec v(2 * q, ExactScalar(0));
    v[2 * k] = ExactScalar(1);
    s.vectors.push_back(v);
  }
  // omega^j / sqrt(q), exact in Q(sqrt3) when q = 3
  std::vector<std::pair<ExactScalar, ExactScalar>> root(q);
  for (int j = 0; j < q; ++j) {
    if (q == 3) {
      static const long re_num[3] = {2, -1, -1};
      static const long im_sign[3] = {0, 1, -1};
      // (1/sqrt3)(cos, sin): cos 0 = 1 -> sqrt3/3, cos 120 = -1/2 -> -sqrt3/6; sin 120 = sqrt3/2 -> 1/2
      root[j] = {ExactScalar::quadratic(Rat(0), frac(re_num[j], 6), 3), ExactScalar(frac(im_sign[j], 2))};
    } else {
      BigFloat th = 2 * bf_pi() * j / q, r = sqrt(BigFloat(q));
      root[j] = {ExactScalar::bigfloat(cos(th) / r), ExactScalar::bigfloat(sin(th) / r)};
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      ScalarVec v(2 * q);
      for (int k = 0; k < q; ++k) {
        int e = static_cast<int>((static_cast<long>(a) * k * k + static_cast<long>(b) * k) % q);
        v[2 * k] = root[e].first;
        v[2 * k + 1] = root[e].second;
      }
      s.vectors.push_back(v);
    }
  s.norm2 = 1;
  return s;
}

Formula sphere_formula(const ComplexVectorSet& s, std::optional<int> claimed) {
  Formula f;
  f.space = SpaceDescriptor::sphere(2 * s.m);
  const ExactScalar w(frac(1, static_cast<long>(s.size())));
  for (const auto& v : s.vectors) {
    f.points.push_back(v);
    f.weights.push_back(w);
  }
  if (!(s.norm2 == ExactScalar(1))) f.norm2 = s.norm2;
  f.claimed_degree = claimed;
  f.provenance = s.name;
  return f;
}

namespace {

std::string line_key(const ScalarVec& v, bool exact) {
  const std::size_t m = v.size() / 2;
  std::size_t j0 = 0;
  while (j0 < m && v[2 * j0].is_zero() && v[2 * j0 + 1].is_zero()) ++j0;
  if (j0 == m) throw std::invalid_argument("zero vector has no line");
  const ExactScalar &ar = v[2 * j0], &ai = v[2 * j0 + 1];
  ScalarVec key;
  for (std::size_t j = 0; j < m; ++j) {
    const ExactScalar &br = v[2 * j], &bi = v[2 * j + 1];
    // z_j * conj(z_j0)
    key.push_back(br * ar + bi * ai);
    key.push_back(bi * ar - br * ai);
  }
  std::string k = std::to_string(j0) + "|";
  if (exact) return k + exact_key(key);
  for (const auto& x : key) k += std::to_string(std::llround(x.to_double() * 1e9)) + ";";
  return k;
}

}  // namespace

std::vector<std::size_t> line_classes(const ComplexVectorSet& s, std::vector<ScalarVec>* reps) {
  bool exact = true;
  for (const auto& v : s.vectors)
    for (const auto& x : v) exact = exact && x.is_exact();
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> cls;
  ExactScalar r;
  bool exact_root = true;
  try {
    r = sqrt_scalar(s.norm2);
    exact_root = r.is_exact();
  } catch (const std::domain_error&) {
    exact_root = false;
  }
  for (const auto& v : s.vectors) {
    auto [it, fresh] = seen.emplace(line_key(v, exact), seen.size());
    cls.push_back(it->second);
    if (!fresh || !reps) continue;
    ScalarVec u;
    for (const auto& x : v) {
      if (exact_root) {
        try {
          u.push_back(x / r);
          continue;
        } catch (const std::domain_error&) {
        }
      }
      u.push_back(ExactScalar::bigfloat(x.to_bigfloat() / sqrt(s.norm2.to_bigfloat())));
    }
    reps->push_back(std::move(u));
  }
  return cls;
}

std::vector<ScalarVec> distinct_lines(const ComplexVectorSet& s) {
  std::vector<ScalarVec> out;
  line_classes(s, &out);
  return out;
}

ComplexVectorSet lines_as_set(const ComplexVectorSet& s) {
  ComplexVectorSet out;
  out.m = s.m;
  out.ring = s.ring;
  out.vectors = distinct_lines(s);
  out.norm2 = 1;
  out.name = "lines of " + s.name;
  return out;
}

Formula tau2_image(const ComplexVectorSet& s) {
  Formula f;
  f.space = SpaceDescriptor::simplex(s.m - 1);
  const ExactScalar w(frac(1, static_cast<long>(s.size())));
  for (const auto& v : s.vectors) {
    ScalarVec p;
    for (int k = 0; k < s.m; ++k) p.push_back((v[2 * k] * v[2 * k] + v[2 * k + 1] * v[2 * k + 1]) / s.norm2);
    f.points.push_back(std::move(p));
    f.weights.push_back(w);
  }
  f.provenance = "tau2 image of " + s.name;
  return merge_duplicates(f);
}

}  // namespace cub
