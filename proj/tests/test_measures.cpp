#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/measures.hpp"

#include <cmath>
#include <random>

using namespace cub;

TEST_CASE("closed-form moments") {
  CHECK(moment(SpaceDescriptor::simplex(2), {1, 0, 0}) == frac(1, 3));
  CHECK(moment(SpaceDescriptor::simplex(2), {2, 0, 0}) == frac(1, 6));
  CHECK(moment(SpaceDescriptor::simplex(2), {1, 1, 0}) == frac(1, 12));
  CHECK(moment(SpaceDescriptor::corner_simplex(2), {1, 0}) == frac(1, 3));
  CHECK(moment(SpaceDescriptor::sphere(3), {2, 0, 0}) == frac(1, 3));
  CHECK(moment(SpaceDescriptor::sphere(3), {4, 0, 0}) == frac(1, 5));
  CHECK(moment(SpaceDescriptor::sphere(3), {2, 2, 0}) == frac(1, 15));
  CHECK(moment(SpaceDescriptor::sphere(3), {1, 0, 0}) == 0);
  CHECK(moment(SpaceDescriptor::ball(3), {2, 0, 0}) == frac(1, 5));
  CHECK(moment(SpaceDescriptor::gaussian(2), {2, 0}) == frac(1, 2));
  CHECK(moment(SpaceDescriptor::gaussian(2), {4, 2}) == frac(3, 8));
  CHECK(moment(SpaceDescriptor::exponential_orthant(2), {2, 3}) == 12);
  CHECK(moment(SpaceDescriptor::jacobi(0, 0), {2}) == frac(1, 3));
  CHECK(moment(SpaceDescriptor::jacobi(1, 0), {1}) == frac(-1, 3));
  CHECK(moment(SpaceDescriptor::torus(2), {0, 0}) == 1);
  CHECK(moment(SpaceDescriptor::torus(2), {1, -1}) == 0);
}

TEST_CASE("length and sign checks") {
  CHECK_THROWS_AS(moment(SpaceDescriptor::simplex(2), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(moment(SpaceDescriptor::sphere(2), {-1, 1}), std::invalid_argument);
  CHECK_NOTHROW(moment(SpaceDescriptor::torus(2), {-1, 1}));
  CHECK_THROWS_AS(SpaceDescriptor::jacobi(-1, 0), std::invalid_argument);
}

TEST_CASE("jacobi moments against midpoint integration") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 2; ++b) {
      auto m = jacobi_moments(a, b, 6);
      const int N = 100000;
      std::vector<double> num(7, 0.0);
      double mass = 0;
      for (int i = 0; i < N; ++i) {
        double x = -1 + (i + 0.5) * 2.0 / N;
        double w = std::pow(1 - x, a) * std::pow(1 + x, b);
        mass += w;
        for (int k = 0; k <= 6; ++k) num[k] += w * std::pow(x, k);
      }
      for (int k = 0; k <= 6; ++k) CHECK(m[k].get_d() == doctest::Approx(num[k] / mass).epsilon(1e-6));
    }
}

TEST_CASE("simplex and sphere moments against Monte Carlo") {
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> ex;
  std::normal_distribution<double> nd;
  const int N = 400000;
  double simplex_acc = 0, sphere_acc = 0, ball_acc = 0;
  for (int i = 0; i < N; ++i) {
    double y[3], s = 0;
    for (double& v : y) s += (v = ex(rng));
    simplex_acc += (y[0] / s) * (y[0] / s) * (y[1] / s);
    double z[4], r = 0;
    for (double& v : z) {
      v = nd(rng);
      r += v * v;
    }
    sphere_acc += z[0] * z[0] * z[1] * z[1] / (r * r);
    // ball(4): radius^4 law, r = U^(1/4)
    double rad = std::pow(std::uniform_real_distribution<double>()(rng), 0.25);
    ball_acc += rad * rad * z[0] * z[0] / r;
  }
  CHECK(moment(SpaceDescriptor::simplex(2), {2, 1, 0}).get_d() == doctest::Approx(simplex_acc / N).epsilon(0.02));
  CHECK(moment(SpaceDescriptor::sphere(4), {2, 2, 0, 0}).get_d() == doctest::Approx(sphere_acc / N).epsilon(0.02));
  CHECK(moment(SpaceDescriptor::ball(4), {2, 0, 0, 0}).get_d() == doctest::Approx(ball_acc / N).epsilon(0.02));
}

TEST_CASE("tabulated measure") {
  auto sp = SpaceDescriptor::tabulated({2, 1, frac(2, 3)}, 0, 2);
  CHECK(moment(sp, {1}) == frac(1, 2));
  CHECK_THROWS(moment(sp, {3}));
  CHECK_THROWS(SpaceDescriptor::tabulated({0, 1}, 0, 1));
}

TEST_CASE("an_root norms") {
  CHECK(an_root_norm({1, -1, 0}) == 1);
  CHECK(an_root_norm({2, -1, -1}) == 2);
  CHECK_THROWS(an_root_norm({1, 0, 0}));
  // root coordinates (c1, c2) <-> k = (c1, c2-c1, -c2)
  CHECK(an_root_norm_from_root_coords({1, 0}) == an_root_norm({1, -1, 0}));
  CHECK(an_root_norm_from_root_coords({2, 1}) == an_root_norm({2, -1, -1}));
}

TEST_CASE("names and symmetry flags") {
  CHECK(SpaceDescriptor::sphere(3).name() == "sphere(3)");
  CHECK(kind_from_name("ball") == SpaceKind::ball);
  CHECK_THROWS(kind_from_name("cube"));
  CHECK(SpaceDescriptor::jacobi(1, 1).sign_symmetric(0));
  CHECK_FALSE(SpaceDescriptor::jacobi(1, 0).sign_symmetric(0));
  CHECK(SpaceDescriptor::simplex(3).coord_count() == 4);
}
