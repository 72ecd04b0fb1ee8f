#include "cubature/torus.hpp"

#include <stdexcept>
#include <string>

namespace cub {

namespace {

Rat frac_part(const Rat& x) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(f);
}

}  // namespace

TorusDesign subgroup_points(const IntegerLattice& lat, std::optional<int> claimed) {
  lat.validate();
  std::vector<std::vector<Int>> v;
  std::vector<Int> d = smith_normal_form(lat.coord_basis(), &v);
  const int r = lat.rank();
  Int total = 1;
  for (const auto& x : d) total *= x;
  if (total > 50000000) throw std::runtime_error("subgroup has " + total.get_str() + " points; refusing to list");
  TorusDesign out;
  out.lattice = lat;
  out.formula.space = lat.torus();
  const ExactScalar w(frac(1, total));
  std::vector<long> y(r, 0);
  while (true) {
    ScalarVec p(r);
    for (int i = 0; i < r; ++i) {
      Rat s = 0;
      for (int j = 0; j < r; ++j)
        if (y[j]) s += Rat(v[i][j]) * frac(y[j], d[j]);
      p[i] = ExactScalar(frac_part(s));
    }
    out.formula.points.push_back(std::move(p));
    out.formula.weights.push_back(w);
    int k = r - 1;
    while (k >= 0 && ++y[k] == d[k].get_si()) y[k--] = 0;
    if (k < 0) break;
  }
  if (claimed) {
    out.degree = *claimed;
    out.formula.claimed_degree = *claimed;
  }
  out.formula.provenance = "dual subgroup of a lattice of index " + total.get_str();
  return out;
}

IntegerLattice noskov_lattice(int s, bool even) {
  if (s < 1) throw std::invalid_argument("noskov needs s >= 1");
  IntegerLattice lat;
  lat.ambient = 2;
  lat.norm = TorusNorm::l1;
  if (even) {
    lat.basis = {{s, s}, {s, -s}};
  } else {
    lat.basis = {{s, s + 1}, {-(s + 1), s}};
  }
  lat.validate();
  return lat;
}

TorusDesign noskov_design(int s, bool even) {
  TorusDesign d = subgroup_points(noskov_lattice(s, even), even ? 2 * s - 1 : 2 * s);
  d.formula.provenance = std::string("noskov ") + (even ? "d=2s" : "d=2s+1") + ", s=" + std::to_string(s);
  return d;
}

IntegerLattice hex_lattice(int d) {
  if (d < 1) throw std::invalid_argument("hex_design needs d >= 1");
  long a = d / 2, b = (d + 1) / 2;
  // g = a - b*omega and g*omega = b + (a+b)*omega, in root coordinates
  std::vector<std::vector<long>> c = {{a, -b}, {b, a + b}};
  IntegerLattice lat;
  lat.ambient = 3;
  lat.norm = TorusNorm::an_root;
  for (const auto& row : c) lat.basis.push_back({row[0], row[1] - row[0], -row[1]});
  lat.validate();
  return lat;
}

TorusDesign hex_design(int d) {
  TorusDesign out = subgroup_points(hex_lattice(d), d - 1);
  out.formula.provenance = "hexagonal ideal design, d=" + std::to_string(d);
  return out;
}

TorusDesign circle_design(int s) {
  if (s < 0) throw std::invalid_argument("circle design needs s >= 0");
  int n = 2 * ((s + 2) / 2);
  TorusDesign out;
  out.formula.space = SpaceDescriptor::torus(1);
  for (int j = 0; j < n; ++j) {
    out.formula.points.push_back({ExactScalar::ratio(j, n)});
    out.formula.weights.push_back(ExactScalar::ratio(1, n));
  }
  out.degree = s;
  out.formula.claimed_degree = s;
  out.formula.provenance = std::to_string(n) + " equally spaced points";
  IntegerLattice lat;
  lat.ambient = 1;
  lat.basis = {{n}};
  out.lattice = lat;
  return out;
}

TorusDesign default_fiber_design(int m, int s) {
  if (m < 1) throw std::invalid_argument("fiber dimension must be >= 1");
  if (m == 1) return circle_design(s);
  if (m == 2) {
    int d = s + 1;
    TorusDesign out = noskov_design(d / 2, d % 2 == 0);
    return out;
  }
  int t = s / 2;
  if (t < 1) t = 1;
  bool boost = s % 2 == 1;
  long p = next_prime_above(std::max(2L * m, 2L * t));
  TorusDesign out = subgroup_points(craig_lattice_Zn(m, t, p, boost), s);
  out.formula.provenance = "craig Z^" + std::to_string(m) + " t=" + std::to_string(t) + " p=" + std::to_string(p) +
                           (boost ? " even-sum" : "");
  return out;
}

TorusDesign shifted(const TorusDesign& d, const std::vector<Rat>& offset) {
  if (offset.size() != static_cast<std::size_t>(d.formula.space.dim))
    throw std::invalid_argument("offset length does not match the torus");
  TorusDesign out = d;
  for (auto& p : out.formula.points)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = ExactScalar(frac_part(p[i].rational() + offset[i]));
  return out;
}

}  // namespace cub
