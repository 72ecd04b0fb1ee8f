#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/verify_kernel.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace cub;
using namespace cub::kernel;

namespace {

template <class T>
std::map<ExponentVector, T> as_map(const std::vector<MonomialSum<T>>& v) {
  std::map<ExponentVector, T> m;
  for (const auto& x : v) m.emplace(x.alpha, x.sum);
  return m;
}

}  // namespace

TEST_CASE("tree kernel matches the reference on doubles") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  const int dim = 4, n = 37, t = 6;
  std::vector<std::vector<double>> x(dim, std::vector<double>(n));
  std::vector<double> w(n);
  for (auto& c : x)
    for (auto& v : c) v = u(rng);
  for (auto& v : w) v = u(rng);
  PruneSpec none;
  auto ref = as_map(reference_sums(x, w, t));
  for (bool par : {false, true}) {
    auto tree = tree_sums(x, w, t, none, par);
    REQUIRE(tree.size() == ref.size());
    for (const auto& m : tree) CHECK(m.sum == doctest::Approx(ref.at(m.alpha)).epsilon(1e-12));
  }
}

TEST_CASE("exact rational sums are identical") {
  std::mt19937_64 rng(9);
  const int dim = 3, n = 11, t = 5;
  std::vector<std::vector<Rat>> x(dim, std::vector<Rat>(n));
  std::vector<Rat> w(n);
  for (auto& c : x)
    for (auto& v : c) v = frac(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1);
  for (auto& v : w) v = frac(static_cast<long>(rng() % 5) + 1, 13);
  auto ref = as_map(reference_sums(x, w, t));
  auto tree = tree_sums(x, w, t, PruneSpec{}, true);
  REQUIRE(tree.size() == ref.size());
  for (const auto& m : tree) CHECK(m.sum == ref.at(m.alpha));
}

TEST_CASE("pruning skips only monomials that vanish by symmetry") {
  // centrally symmetric point set: x and -x
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  const int dim = 3, half = 10, t = 5;
  std::vector<std::vector<double>> x(dim, std::vector<double>(2 * half));
  std::vector<double> w(2 * half, 1.0);
  for (int i = 0; i < half; ++i)
    for (int c = 0; c < dim; ++c) {
      x[c][i] = u(rng);
      x[c][i + half] = -x[c][i];
    }
  PruneSpec ps;
  ps.central = true;
  auto ref = as_map(reference_sums(x, w, t));
  auto pruned = tree_sums(x, w, t, ps, true);
  for (const auto& m : pruned) {
    CHECK(monomial_degree(m.alpha) % 2 == 0);
    CHECK(m.sum == doctest::Approx(ref.at(m.alpha)).epsilon(1e-12));
  }
  for (const auto& [a, s] : ref)
    if (monomial_degree(a) % 2) CHECK(std::fabs(s) < 1e-12);
  std::size_t even = 0;
  for (const auto& [a, s] : ref) even += monomial_degree(a) % 2 == 0;
  CHECK(pruned.size() == even);
}

TEST_CASE("quadratic field elements") {
  qfield() = 3;
  std::vector<std::vector<QElem>> x{{QElem{0, 1}, QElem{1, 0}}};
  std::vector<QElem> w{QElem{frac(1, 2), 0}, QElem{frac(1, 2), 0}};
  auto s = as_map(tree_sums(x, w, 2, PruneSpec{}, false));
  // (sqrt3^2 + 1^2) / 2 = 2
  CHECK(s.at({2}).a == 2);
  CHECK(s.at({2}).b == 0);
  CHECK(s.at({1}).a == frac(1, 2));
  CHECK(s.at({1}).b == frac(1, 2));
}
