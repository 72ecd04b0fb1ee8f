#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/catalog.hpp"
#include "cubature/complex_sets.hpp"
#include "cubature/fibrations.hpp"
#include "cubature/pipelines.hpp"
#include "cubature/quadrature.hpp"
#include "cubature/torus.hpp"

#include <cmath>
#include <map>

using namespace cub;

namespace {

VerifyOptions floating(double tol = 1e-9) {
  VerifyOptions o;
  o.mode = VerifyMode::floating;
  o.tol = tol;
  return o;
}

}  // namespace

TEST_CASE("octahedron height projection is Simpson's rule") {
  auto f = project_formula(named_formula("platonic-octa"), fiber_map(FiberKind::height, SpaceDescriptor::sphere(3)));
  REQUIRE(f.size() == 3);
  std::map<std::string, std::string> pw;
  for (std::size_t i = 0; i < f.size(); ++i) pw[f.points[i][0].str()] = f.weights[i].str();
  CHECK(pw == std::map<std::string, std::string>{{"-1", "1/6"}, {"0", "2/3"}, {"1", "1/6"}});
  CHECK(verify(f, 3).pass);
}

TEST_CASE("tau2 and hopf maps") {
  auto e8 = sphere_formula(e8_roots(E8Position::eisenstein), 7);
  auto t2 = project_formula(e8, fiber_map(FiberKind::tau2, e8.space));
  CHECK(t2.space == SpaceDescriptor::simplex(3));
  CHECK(t2.size() == 8);
  CHECK(verify(t2, 3).pass);

  auto h = project_formula(e8, fiber_map(FiberKind::hopf, e8.space));
  CHECK(h.size() == 40);
  for (const auto& w : h.weights) CHECK(w == ExactScalar::ratio(1, 40));
  CHECK(h.claimed_degree == 3);

  auto k = sphere_formula(k12_short_vectors());
  auto kt = project_formula(k, fiber_map(FiberKind::tau2, k.space));
  CHECK(kt.size() == 16);
  CHECK_THROWS(fiber_map(FiberKind::tau2, SpaceDescriptor::sphere(3)));
}

TEST_CASE("tau1 pushes the octahedron to the simplex vertices") {
  auto f = project_formula(named_formula("platonic-octa"), fiber_map(FiberKind::tau1, SpaceDescriptor::sphere(3)));
  CHECK(f.size() == 3);
  CHECK_FALSE(f.claimed_degree.has_value());
}

TEST_CASE("projection keeps exactness on every sphere catalog instance") {
  for (auto pos : {E8Position::eisenstein, E8Position::gaussian, E8Position::real}) {
    auto f = sphere_formula(e8_roots(pos), 7);
    auto g = project_formula(f, fiber_map(FiberKind::tau2, f.space));
    CHECK(g.claimed_degree == 3);
    CHECK(verify(g, 3).pass);
  }
  auto m = tau2_image(mub_design(3));
  CHECK(verify(m, 2).pass);
}

TEST_CASE("fiber profiles") {
  auto base = s3_base(3);
  auto prof = fiber_profile(base);
  int generic = 0;
  for (bool g : prof.generic) generic += g;
  CHECK(generic == 1);
  auto dims = needed_subtorus_dims(base);
  CHECK(dims == std::vector<int>{1, 2});
}

TEST_CASE("S^3 family counts and degrees") {
  for (int s = 1; s <= 7; ++s) {
    auto f = s3_family(s);
    std::size_t expect = s % 2 ? (s + 1) * (s * s + 3) : (s + 1) * (s * s + s + 2);
    CHECK(f.size() == expect);
    CHECK(s3_expected_count(s) == expect);
    CHECK(verify(f, 2 * s + 1, floating()).pass);
    CHECK_FALSE(verify(f, 2 * s + 2, floating()).pass);
    for (const auto& w : f.weights) CHECK(w.sign() > 0);
  }
  CHECK(s3_family(3).size() == 48);
  CHECK(s3_family(2).size() == 24);
}

TEST_CASE("twisted product counts") {
  auto base = hadamard_simplex_formula(4);
  auto designs = default_fiber_designs(base, 7);
  std::size_t expect = 0;
  for (const auto& p : base.points) {
    int m = 0;
    for (const auto& x : p) m += !x.is_zero();
    expect += designs.at(m).size();
  }
  CHECK(twisted_product_count(base, designs) == expect);
  auto f = twisted_product(base, designs, 7);
  CHECK(f.size() == expect);
  CHECK(verify(f, 7, floating(1e-10)).pass);
  auto missing = designs;
  missing.erase(4);
  CHECK_THROWS(twisted_product(base, missing, 7));
}

TEST_CASE("interior base gives |F_T| |F_Y|") {
  Formula base;
  base.space = SpaceDescriptor::simplex(1);
  base.points = {{ExactScalar::ratio(1, 2), ExactScalar::ratio(1, 2)}};
  base.weights = {ExactScalar(1)};
  FiberDesigns d{{2, noskov_design(1, false)}};
  auto f = twisted_product(base, d, 1);
  CHECK(f.size() == 5);
  CHECK(verify(f, 1, floating()).pass);
}

TEST_CASE("rotated fibers keep the degree") {
  auto base = s3_base(3);
  TwistOptions opt;
  opt.rotation = [](std::size_t i, int m) { return std::vector<Rat>(m, frac(static_cast<long>(i) + 1, 11)); };
  auto designs = default_fiber_designs(base, 7);
  auto f = twisted_product(base, designs, 7, opt);
  CHECK(verify(f, 7, floating()).pass);
}

TEST_CASE("ball and gaussian lifts") {
  auto b = ball4_pipeline();
  CHECK(b.size() == 64);
  CHECK(classify(b).label() == "PI");
  CHECK(verify(b, 7, floating()).pass);
  CHECK_FALSE(verify(b, 8, floating()).pass);

  auto g = gauss4_pipeline();
  CHECK(g.size() == 190);
  CHECK(classify(g).positive);
  CHECK(verify(g, 7, floating(1e-6)).pass);

  // center of the corner 1-simplex times a 4-point circle design: B^2 exact at 3
  Formula c;
  c.space = SpaceDescriptor::corner_simplex(1);
  c.points = {{ExactScalar::ratio(1, 2)}};
  c.weights = {ExactScalar(1)};
  auto f = twisted_product(c, {{1, circle_design(3)}}, 3);
  CHECK(f.size() == 4);
  CHECK(f.space == SpaceDescriptor::ball(2));
  CHECK(verify(f, 3, floating()).pass);

  // origin of the corner simplex maps to a single point
  Formula o;
  o.space = SpaceDescriptor::corner_simplex(1);
  o.points = {{ExactScalar(0)}};
  o.weights = {ExactScalar(1)};
  CHECK(twisted_product(o, {{1, circle_design(3)}}, 3).size() == 1);
}

TEST_CASE("Hopf lifts") {
  ComplexVectorSet one;
  one.m = 2;
  one.vectors = {{ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(0)}};
  one.norm2 = ExactScalar(1);
  CHECK(hopf_lift(one, 0).size() == 2);

  auto m = hopf_lift(mub_design(3), 2);
  CHECK(m.size() == 72);
  CHECK(verify(m, 5, floating()).pass);
  CHECK_FALSE(verify(m, 6, floating()).pass);

  auto e = hopf_lift(lines_as_set(e8_roots(E8Position::eisenstein)), 3);
  CHECK(e.size() == 320);
  CHECK(verify(e, 7, floating()).pass);
}

TEST_CASE("sphere7 pipeline") {
  auto f = sphere7_pipeline(4);
  CHECK(f.space == SpaceDescriptor::sphere(8));
  CHECK(f.size() == sphere7_count(4));
  CHECK(verify(f, 7, floating()).pass);
  for (int n : {4, 8, 12}) {
    double ratio = static_cast<double>(sphere7_count(n)) / (4.0 * std::pow(n, 4));
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 3);
  }
}
