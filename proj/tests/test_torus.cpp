#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/lattice.hpp"
#include "cubature/torus.hpp"
#include "lattice_oracle.hpp"

#include <cmath>
#include <complex>

using namespace cub;

namespace {

// Largest t with every character of norm 1..t summing to zero, in double.
int char_degree(const Formula& f, int tmax, TorusNorm norm) {
  const int n = f.space.dim;
  for (int t = 1; t <= tmax; ++t) {
    std::vector<long> k(n, 0);
    bool ok = true;
    std::function<void(int)> rec = [&](int i) {
      if (!ok) return;
      if (i == n) {
        std::vector<long> full = k;
        int nm;
        if (norm == TorusNorm::l1) {
          nm = oracle::l1(k);
        } else {
          // root coordinates c -> zero-sum vector
          int pos = 0;
          long prev = 0;
          for (long v : k) {
            if (v - prev > 0) pos += v - prev;
            prev = v;
          }
          if (-prev > 0) pos += -prev;
          nm = pos;
        }
        if (nm != t) return;
        std::complex<double> s = 0;
        for (std::size_t j = 0; j < f.size(); ++j) {
          double ph = 0;
          for (int c = 0; c < n; ++c) ph += k[c] * f.points[j][c].to_double();
          s += f.weights[j].to_double() * std::polar(1.0, 2 * M_PI * ph);
        }
        if (std::abs(s) > 1e-9) ok = false;
        return;
      }
      for (long v = -2 * t; v <= 2 * t; ++v) {
        k[i] = v;
        rec(i + 1);
      }
      k[i] = 0;
    };
    rec(0);
    if (!ok) return t - 1;
  }
  return tmax;
}

}  // namespace

TEST_CASE("subgroup points of 2Z^2") {
  IntegerLattice lat;
  lat.ambient = 2;
  lat.basis = {{2, 0}, {0, 2}};
  auto d = subgroup_points(lat);
  CHECK(d.size() == 4);
  for (const auto& p : d.formula.points)
    for (const auto& x : p) CHECK((x == ExactScalar(0) || x == ExactScalar::ratio(1, 2)));
}

TEST_CASE("plus pentomino design") {
  auto d = subgroup_points(craig_lattice_Zn(2, 1, 5, false), 2);
  CHECK(d.size() == 5);
  CHECK(char_degree(d.formula, 4, TorusNorm::l1) == 2);
  VerifyOptions o;
  o.mode = VerifyMode::floating;
  CHECK(verify(d.formula, 2, o).pass);
  CHECK_FALSE(verify(d.formula, 3, o).pass);
}

TEST_CASE("Noskov designs") {
  auto a = noskov_design(2, true);
  CHECK(a.size() == 8);
  CHECK(a.degree == 3);
  VerifyOptions wide;
  wide.mode = VerifyMode::floating;
  wide.eval_bits = 256;
  CHECK(verify(a.formula, 3, wide).pass);
  CHECK_FALSE(verify(a.formula, 4, wide).pass);
  CHECK(min_distance(*a.lattice, 8).value == 4);
  auto b = noskov_design(2, false);
  CHECK(b.size() == 13);
  CHECK(char_degree(b.formula, 6, TorusNorm::l1) == 4);
  CHECK(design_degree_structural(*noskov_design(3, true).lattice, 8) == 5);
  auto c = noskov_design(4, true);
  CHECK(c.size() == 32);
  VerifyOptions o;
  o.mode = VerifyMode::floating;
  CHECK(verify(c.formula, 7, o).pass);
}

TEST_CASE("Noskov odd lattices have distance 2s+1") {
  for (int s = 1; s <= 8; ++s) {
    auto lat = noskov_lattice(s, false);
    CHECK(oracle::min_l1(lat.coord_basis(), 2 * s + 2) == 2 * s + 1);
  }
}

TEST_CASE("closed-form counts for s <= 8") {
  for (int s = 1; s <= 8; ++s) {
    CHECK(noskov_design(s, true).size() == static_cast<std::size_t>(2 * s * s));
    CHECK(noskov_design(s, false).size() == static_cast<std::size_t>(s * s + (s + 1) * (s + 1)));
    CHECK(hex_design(2 * s).size() == static_cast<std::size_t>(3 * s * s));
    CHECK(hex_design(2 * s + 1).size() == static_cast<std::size_t>(3 * s * s + 3 * s + 1));
  }
}

TEST_CASE("hexagonal designs") {
  CHECK(hex_design(2).size() == 3);
  CHECK(hex_design(3).size() == 7);
  CHECK(hex_design(5).size() == 19);
  CHECK(min_distance(hex_lattice(3), 6).value == 3);
  for (int d = 2; d <= 6; ++d) CHECK(char_degree(hex_design(d).formula, d + 1, TorusNorm::an_root) == d - 1);
}

TEST_CASE("lattice duality: verify passes iff the structural degree allows it") {
  std::vector<IntegerLattice> lats = {craig_lattice_Zn(2, 1, 5, false), craig_lattice_Zn(3, 1, 7, false),
                                      noskov_lattice(2, true), noskov_lattice(3, false), hex_lattice(4)};
  for (const auto& lat : lats) {
    int sd = design_degree_structural(lat, 8);
    auto d = subgroup_points(lat);
    VerifyOptions o;
    o.mode = VerifyMode::floating;
    for (int t = 1; t <= std::min(sd + 1, 7); ++t) CHECK(verify(d.formula, t, o).pass == (t <= sd));
  }
}

TEST_CASE("circle designs and shifts") {
  for (int s = 0; s <= 9; ++s) {
    auto c = circle_design(s);
    CHECK(c.size() == static_cast<std::size_t>(2 * ((s + 2) / 2)));
    CHECK(char_degree(c.formula, s + 2, TorusNorm::l1) >= s);
  }
  auto d = shifted(noskov_design(2, true), {frac(1, 7), frac(2, 5)});
  VerifyOptions o;
  o.mode = VerifyMode::floating;
  CHECK(verify(d.formula, 3, o).pass);
  CHECK_THROWS(shifted(d, {frac(1, 2)}));
}

TEST_CASE("default fiber designs reach the requested degree") {
  for (int m = 1; m <= 4; ++m)
    for (int s : {3, 5, 7}) {
      auto d = default_fiber_design(m, s);
      VerifyOptions o;
      o.mode = VerifyMode::floating;
      CHECK(verify(d.formula, s, o).pass);
    }
}
