#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/formula.hpp"

using namespace cub;

namespace {

Formula octahedron() {
  Formula f;
  f.space = SpaceDescriptor::sphere(3);
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      ScalarVec p(3, ExactScalar(0));
      p[i] = s;
      f.points.push_back(p);
      f.weights.push_back(ExactScalar::ratio(1, 6));
    }
  return f;
}

Formula simpson() {
  Formula f;
  f.space = SpaceDescriptor::jacobi(0, 0);
  f.points = {{ExactScalar(-1)}, {ExactScalar(0)}, {ExactScalar(1)}};
  f.weights = {ExactScalar::ratio(1, 6), ExactScalar::ratio(2, 3), ExactScalar::ratio(1, 6)};
  return f;
}

}  // namespace

TEST_CASE("octahedron is a 3-design and not a 4-design") {
  auto f = octahedron();
  auto r = verify(f, 3);
  CHECK(r.pass);
  CHECK(r.worst == 0);
  auto r4 = verify(f, 4);
  CHECK_FALSE(r4.pass);
  CHECK(r4.lowest_failing_degree == 4);
  REQUIRE_FALSE(r4.failures.empty());
  // x^4 sums to 1/3 against 1/5
  bool found = false;
  for (const auto& x : r4.failures)
    if (x.alpha == ExponentVector{4, 0, 0}) {
      found = true;
      CHECK(x.value == "2/15");
    }
  CHECK(found);
  CHECK(max_degree(f, 10) == 3);
}

TEST_CASE("float mode widths agree") {
  auto f = octahedron();
  for (unsigned bits : {53u, 64u, 128u}) {
    VerifyOptions o;
    o.mode = VerifyMode::floating;
    o.eval_bits = bits;
    CHECK(verify(f, 3, o).pass);
    CHECK_FALSE(verify(f, 4, o).pass);
  }
}

TEST_CASE("pruned and unpruned verification agree") {
  auto f = octahedron();
  VerifyOptions o;
  o.prune = false;
  auto a = verify(f, 5, o), b = verify(f, 5);
  CHECK(a.pass == b.pass);
  CHECK(a.lowest_failing_degree == b.lowest_failing_degree);
  CHECK(a.evaluated_count > b.evaluated_count);
  auto sym = certify_symmetries(f);
  CHECK(sym.central);
  CHECK(sym.flips.size() == 3);
}

TEST_CASE("norm2 scaling") {
  // cube vertices (+-1,+-1,+-1) with |q|^2 = 3
  Formula f;
  f.space = SpaceDescriptor::sphere(3);
  f.norm2 = ExactScalar(3);
  for (int m = 0; m < 8; ++m) {
    f.points.push_back({ExactScalar(m & 1 ? -1 : 1), ExactScalar(m & 2 ? -1 : 1), ExactScalar(m & 4 ? -1 : 1)});
    f.weights.push_back(ExactScalar::ratio(1, 8));
  }
  CHECK(max_degree(f, 6) == 3);
  auto p = f.normalized_point(0);
  CHECK(p[0] == ExactScalar::quadratic(0, frac(1, 3), 3));
  CHECK(classify(f).label() == "EI");
}

TEST_CASE("classification labels") {
  CHECK(classify(simpson()).label() == "PB");
  auto g = simpson();
  g.points = {{ExactScalar::ratio(-1, 2)}, {ExactScalar(0)}, {ExactScalar::ratio(1, 2)}};
  g.weights = {ExactScalar::ratio(1, 3), ExactScalar::ratio(1, 3), ExactScalar::ratio(1, 3)};
  CHECK(classify(g).label() == "EI");
  g.weights[1] = ExactScalar(-1);
  CHECK(classify(g).label() == "negative");
  g.points[0] = {ExactScalar(2)};
  CHECK(classify(g).exterior);
}

TEST_CASE("merge duplicates sums weights and drops zeros") {
  Formula f = simpson();
  f.points.push_back({ExactScalar(0)});
  f.weights.push_back(ExactScalar::ratio(1, 3));
  f.points.push_back({ExactScalar(5)});
  f.weights.push_back(ExactScalar(0));
  auto g = merge_duplicates(f);
  CHECK(g.size() == 3);
  CHECK(g.weights[1] == ExactScalar(1));
}

TEST_CASE("orbit symmetrization") {
  // cyclic shift of (1,2,3) and a sign flip on the first coordinate
  auto cyc = SignedPerm::from_cycles(3, {{1, 2, 3}});
  ScalarVec v{ExactScalar(1), ExactScalar(2), ExactScalar(3)};
  auto w = cyc.apply(v);
  CHECK(w[1] == ExactScalar(1));
  CHECK(w[2] == ExactScalar(2));
  CHECK(w[0] == ExactScalar(3));

  SignedPerm flip;
  flip.perm = {0, 1, 2};
  flip.sign = {-1, 1, 1};
  auto f = orbit_symmetrize(SpaceDescriptor::sphere(3), {{ExactScalar(1), ExactScalar(0), ExactScalar(0)}},
                            {ExactScalar::ratio(1, 6)}, {cyc, flip});
  CHECK(f.size() == 6);
  CHECK(verify(f, 3).pass);
  CHECK_THROWS(orbit_symmetrize(SpaceDescriptor::sphere(3), {{ExactScalar(1), ExactScalar(0), ExactScalar(0)}},
                                {ExactScalar::ratio(1, 5)}, {cyc, flip}));
  CHECK_THROWS(orbit_symmetrize(SpaceDescriptor::sphere(3), {{ExactScalar(1), ExactScalar(0), ExactScalar(0)}},
                                {ExactScalar::ratio(1, 6)}, {cyc, flip}, 3));
}

TEST_CASE("Welch criterion on CP^1") {
  // the six points of the octahedron as lines in C^2: a 2-design on CP^1 (|F| = 6 >= 4)
  std::vector<ScalarVec> lines;
  auto h = ExactScalar::quadratic(0, frac(1, 2), 2);
  auto z = ExactScalar(0), one = ExactScalar(1);
  lines.push_back({one, z, z, z});
  lines.push_back({z, z, one, z});
  lines.push_back({h, z, h, z});
  lines.push_back({h, z, -h, z});
  lines.push_back({h, z, z, h});
  lines.push_back({h, z, z, -h});
  auto r = cp_design_check(lines, 2);
  CHECK(r.pass);
  CHECK(r.target == "1/3");
  CHECK(cp_design_check(lines, 3).pass);
  // the first two lines alone are only a 1-design
  std::vector<ScalarVec> two(lines.begin(), lines.begin() + 2);
  CHECK(cp_design_check(two, 1).pass);
  CHECK_FALSE(cp_design_check(two, 2).pass);
  CHECK_THROWS(cp_design_check({{one, one, z, z}}, 1));
}

TEST_CASE("validate") {
  Formula f = simpson();
  f.weights.pop_back();
  CHECK_THROWS(f.validate());
  Formula g = simpson();
  g.norm2 = ExactScalar(2);
  CHECK_THROWS(g.validate());
}
