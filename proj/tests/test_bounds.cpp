#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/bounds.hpp"
#include "repo_formulas.hpp"

#include <functional>
#include <set>

using namespace cub;

namespace {

// #{k in Z^n : |k|_1 <= r} by enumeration
long brute_l1_ball(int n, int r, int parity = -1) {
  long count = 0;
  std::function<void(int, int, int)> rec = [&](int i, int left, int used) {
    if (i == n) {
      if (parity < 0 || used % 2 == parity) ++count;
      return;
    }
    for (int v = -left; v <= left; ++v) rec(i + 1, left - std::abs(v), used + std::abs(v));
  };
  rec(0, r, 0);
  return count;
}

// |Delta^(a) - Delta^(b)| in Z^{n+1} by enumeration
std::size_t brute_psu(int n, int a, int b) {
  auto simplex = [&](int s) {
    std::vector<std::vector<int>> pts;
    std::vector<int> v(n + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n) {
        v[n] = left;
        pts.push_back(v);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        v[i] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, s);
    return pts;
  };
  std::set<std::vector<int>> diff;
  for (const auto& p : simplex(a))
    for (const auto& q : simplex(b)) {
      std::vector<int> d(n + 1);
      for (int i = 0; i <= n; ++i) d[i] = p[i] - q[i];
      diff.insert(d);
    }
  return diff.size();
}

// polynomials of degree <= t restricted to S^{n-1}: monomials of degree t and t-1
Int brute_sphere_dim(int n, int t) {
  auto exact = [&](int deg) { return static_cast<long>(enumerate_monomials(n, deg).size()) - (deg ? static_cast<long>(enumerate_monomials(n, deg - 1).size()) : 0); };
  return Int(exact(t) + (t ? exact(t - 1) : 0));
}

}  // namespace

TEST_CASE("Stroud bound") {
  CHECK(stroud_bound(SpaceDescriptor::jacobi(0, 0), 4) == 3);
  CHECK(stroud_bound(SpaceDescriptor::torus(2), 4) == 13);
  CHECK(stroud_bound(SpaceDescriptor::simplex(2), 4) == 6);
  CHECK_THROWS(stroud_bound(SpaceDescriptor::simplex(2), 3));
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t <= 4; ++t) {
      CHECK(stroud_bound(SpaceDescriptor::sphere(n), 2 * t) == brute_sphere_dim(n, t));
      if (n <= 4) CHECK(stroud_bound(SpaceDescriptor::torus(n), 2 * t) == brute_l1_ball(n, t));
      CHECK(stroud_bound(SpaceDescriptor::simplex(n), 2 * t) == binomial(n + t, n));
    }
}

TEST_CASE("Moller sphere bound") {
  CHECK(moller_sphere_bound(2, 5) == 6);
  CHECK(moller_sphere_bound(15, 7) == 1360);
  CHECK(moller_sphere_bound(7, 1) == 2);
  CHECK_THROWS(moller_sphere_bound(3, 4));
  // at least the Stroud bound of the even floor, with the same n in both
  for (int n = 1; n <= 20; ++n)
    for (int t = 0; t <= 6; ++t)
      CHECK(moller_sphere_bound(n, 2 * t + 1) >= stroud_bound(SpaceDescriptor::sphere(n), 2 * t));
}

TEST_CASE("CP^n bound") {
  CHECK(cpn_bound(3, 1) == 40);
  CHECK(cpn_bound(1, 0) == 2);
  CHECK(cpn_bound(2, 2) == 60);
  // met with equality by the 40 Hopf lines of the Eisenstein E8 roots
  auto lines = distinct_lines(e8_roots(E8Position::eisenstein));
  CHECK(lines.size() == 40);
  CHECK(cp_design_check(lines, 3).pass);
  auto r = cpn_check(3, 1, lines.size());
  CHECK(r.satisfied());
  CHECK(*r.slack == doctest::Approx(1.0));
}

TEST_CASE("PSU torus bound") {
  CHECK(psu_torus_bound(2, 2) == 7);
  CHECK(psu_torus_bound(2, 1) == 3);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t <= 5; ++t) {
      int a = (t + 1) / 2, b = t / 2;
      CHECK(psu_torus_bound(n, t) == Int(static_cast<unsigned long>(brute_psu(n, a, b))));
      if (t % 2 == 0) CHECK(psu_torus_bound(n, t) == an_root_ball_count(n, t / 2));
    }
  double ratio = psu_torus_bound(40, 3).get_d() / psu_torus_asymptotic(40, 3);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.2));
  CHECK_THROWS(psu_torus_bound(40, 6, 1000));
}

TEST_CASE("lattice point counts") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 5; ++r) {
      CHECK(l1_ball_count(n, r) == brute_l1_ball(n, r));
      CHECK(l1_parity_count(n, r) == brute_l1_ball(n, r, r % 2));
    }
}

TEST_CASE("Stroud-Mysovskikh check") {
  auto a = stroud_mysovskikh_check(2, 2, 5);
  CHECK(a.value == 5);
  CHECK(a.satisfied());
  CHECK(noskov_design(1, false).size() == 5);
  auto b = stroud_mysovskikh_check(3, 5);
  REQUIRE(b.lattice_count.has_value());
  CHECK(*b.lattice_count == 38);
  CHECK(b.asymptotic.has_value());
}

TEST_CASE("Craig Lambda^(2)(Z^n) sizes stay within 2.5 (2n)^2/2!") {
  for (int n = 8; n <= 16; ++n) {
    long p = next_prime_above(2 * n);
    auto d = subgroup_points(craig_lattice_Zn(n, 2, p, false));
    double ratio = static_cast<double>(d.size()) / (2.0 * n * n);
    INFO("n = " << n << ", p = " << p << ", size = " << d.size() << ", ratio = " << ratio);
    CHECK(ratio <= 2.5);
  }
}

TEST_CASE("every formula meets every applicable bound") {
  for (const auto& rf : repo_formulas()) {
    INFO(rf.name);
    for (const auto& b : applicable_bounds(rf.formula, rf.degree)) {
      INFO(b.name << " " << b.value.get_str());
      CHECK(b.satisfied());
      CHECK(*b.slack >= 1.0);
    }
  }
}
