#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/measures.hpp"
#include "cubature/monomials.hpp"
#include "cubature/orthopoly.hpp"

#include <cmath>

using namespace cub;

TEST_CASE("Legendre coefficients") {
  auto p2 = jacobi_poly(0, 0, 2);
  REQUIRE(p2.coeffs.size() == 3);
  CHECK(p2.coeffs[0] == frac(-1, 2));
  CHECK(p2.coeffs[1] == 0);
  CHECK(p2.coeffs[2] == frac(3, 2));
  auto p3 = jacobi_poly(0, 0, 3);
  CHECK(p3.coeffs[3] == frac(5, 2));
  CHECK(p3.coeffs[1] == frac(-3, 2));
}

TEST_CASE("normalization at 1") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int t = 0; t <= 8; ++t) CHECK(jacobi_poly(a, b, t)(Rat(1)) == Rat(binomial(t + a, t)));
}

TEST_CASE("orthogonality is exact") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int t = 1; t <= 7; ++t) {
        auto pt = jacobi_poly(a, b, t);
        for (int s = 0; s < t; ++s) CHECK(jacobi_inner(pt, jacobi_poly(a, b, s)) == 0);
        CHECK(jacobi_inner(pt, pt) > 0);
      }
}

TEST_CASE("inner product against numeric quadrature") {
  // midpoint rule on the normalized weight (1-x)^2 (1+x)
  auto p = jacobi_poly(2, 1, 3);
  const int N = 200000;
  double num = 0, mass = 0;
  for (int i = 0; i < N; ++i) {
    double x = -1 + (i + 0.5) * 2.0 / N;
    double w = (1 - x) * (1 - x) * (1 + x);
    double v = static_cast<double>(p(BigFloat(x)));
    num += w * v * v;
    mass += w;
  }
  CHECK(jacobi_inner(p, p).get_d() == doctest::Approx(num / mass).epsilon(1e-6));
}

TEST_CASE("recurrence from moments reproduces the Jacobi recurrence") {
  for (int a = 0; a <= 3; ++a) {
    auto r = jacobi_recurrence(a, 1, 6);
    auto m = jacobi_moments(a, 1, 11);
    auto q = recurrence_from_moments(m, 6);
    for (int k = 0; k < 6; ++k) {
      CHECK(q.alpha[k] == r.alpha[k]);
      CHECK(q.beta[k] == r.beta[k]);
    }
  }
}

TEST_CASE("zeros") {
  auto z = jacobi_zeros(0, 0, 2);
  REQUIRE(z.size() == 2);
  BigFloat s3 = 1 / sqrt(BigFloat(3));
  CHECK(abs(abs(z[0]) - s3) < BigFloat("1e-70"));
  CHECK(abs(z[0] + z[1]) < BigFloat("1e-70"));
  auto z5 = jacobi_zeros(3, 1, 9);
  auto p = jacobi_poly(3, 1, 9);
  for (std::size_t i = 0; i < z5.size(); ++i) {
    CHECK(abs(p(z5[i])) < BigFloat("1e-60"));
    if (i) CHECK(z5[i - 1] < z5[i]);
  }
  // interlacing with degree 8
  auto z4 = jacobi_zeros(3, 1, 8);
  for (std::size_t i = 0; i < z4.size(); ++i) {
    CHECK(z5[i] < z4[i]);
    CHECK(z4[i] < z5[i + 1]);
  }
}
