#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/quadrature.hpp"

#include <cmath>

using namespace cub;

namespace {

BigFloat sum_moment(const Formula& f, int k) {
  BigFloat s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f.weights[i].to_bigfloat() * pow(f.points[i][0].to_bigfloat(), k);
  return s;
}

}  // namespace

TEST_CASE("three-point Gauss-Legendre") {
  auto f = gauss_quadrature(SpaceDescriptor::jacobi(0, 0), 3);
  REQUIRE(f.size() == 3);
  BigFloat x = sqrt(BigFloat(3) / 5);
  CHECK(abs(f.points[0][0].to_bigfloat() + x) < BigFloat("1e-70"));
  CHECK(abs(f.points[1][0].to_bigfloat()) < BigFloat("1e-70"));
  CHECK(abs(f.weights[0].to_bigfloat() - BigFloat(5) / 18) < BigFloat("1e-70"));
  CHECK(abs(f.weights[1].to_bigfloat() - BigFloat(8) / 18) < BigFloat("1e-70"));
}

TEST_CASE("Gauss rules are exact to 2t-1 and not 2t") {
  for (int a = 0; a <= 5; ++a)
    for (int t = 1; t <= 10; ++t) {
      auto sp = SpaceDescriptor::jacobi(a, 0);
      auto f = gauss_quadrature(sp, t);
      auto m = jacobi_moments(a, 0, 2 * t);
      for (int k = 0; k < 2 * t; ++k) CHECK(abs(sum_moment(f, k) - BigFloat(m[k].get_mpq_t())) < BigFloat(ldexp(BigFloat(1), -128)));
      CHECK(abs(sum_moment(f, 2 * t) - BigFloat(m[2 * t].get_mpq_t())) > BigFloat("1e-30"));
      VerifyOptions opt;
      opt.mode = VerifyMode::floating;
      opt.eval_bits = 256;
      CHECK(verify(f, 2 * t - 1, opt).pass);
      CHECK_FALSE(verify(f, 2 * t, opt).pass);
    }
}

TEST_CASE("Lobatto t=3 is Simpson's rule") {
  auto f = lobatto_radau_quadrature(SpaceDescriptor::jacobi(0, 0), 3, EndpointRule::lobatto);
  REQUIRE(f.size() == 3);
  double w[] = {1.0 / 6, 2.0 / 3, 1.0 / 6}, x[] = {-1, 0, 1};
  for (int i = 0; i < 3; ++i) {
    CHECK(f.points[i][0].to_double() == doctest::Approx(x[i]));
    CHECK(f.weights[i].to_double() == doctest::Approx(w[i]));
  }
}

TEST_CASE("Radau rules include the left endpoint") {
  for (int t = 2; t <= 10; t += 2) {
    auto f = lobatto_radau_quadrature(SpaceDescriptor::jacobi(1, 0), t, EndpointRule::radau);
    CHECK(f.size() == static_cast<std::size_t>((t + 2) / 2));
    CHECK(f.points[0][0].to_double() == -1.0);
    VerifyOptions opt;
    opt.mode = VerifyMode::floating;
    opt.eval_bits = 256;
    CHECK(verify(f, t, opt).pass);
    for (const auto& w : f.weights) CHECK(w.sign() > 0);
  }
  // Radau on [-1,1], two points: -1 (w 1/4), 1/3 (w 3/4)
  auto r = lobatto_radau_quadrature(SpaceDescriptor::jacobi(0, 0), 2, EndpointRule::radau);
  CHECK(r.points[1][0].to_double() == doctest::Approx(1.0 / 3));
  CHECK(r.weights[0].to_double() == doctest::Approx(0.25));
}

TEST_CASE("tabulated moments") {
  // uniform on [0,1]: m_k = 1/(k+1)
  std::vector<Rat> m;
  for (int k = 0; k <= 7; ++k) m.push_back(frac(1, k + 1));
  auto sp = SpaceDescriptor::tabulated(m, 0, 1);
  auto f = gauss_quadrature(sp, 2);
  BigFloat x0 = (1 - 1 / sqrt(BigFloat(3))) / 2;
  CHECK(abs(f.points[0][0].to_bigfloat() - x0) < BigFloat("1e-60"));
  CHECK(abs(f.weights[0].to_bigfloat() - BigFloat(0.5)) < BigFloat("1e-60"));
}
