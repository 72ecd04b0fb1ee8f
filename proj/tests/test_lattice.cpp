#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubature/lattice.hpp"
#include "lattice_oracle.hpp"

#include <random>

using namespace cub;

TEST_CASE("determinant, HNF and SNF") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(determinant(m) == -144);
  auto d = smith_normal_form(m);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  auto h = hermite_normal_form(m);
  // upper triangular with positive pivots, same lattice
  for (int i = 0; i < 3; ++i) {
    CHECK(h[i][i] > 0);
    for (int j = 0; j < i; ++j) CHECK(h[i][j] == 0);
  }
  CHECK(abs(determinant(h)) == 144);
  for (const auto& row : h) CHECK(oracle::member(m, row));
  for (const auto& row : m) CHECK(oracle::member(h, row));
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(next_prime_above(8) == 11);
  CHECK(next_prime_above(11) == 13);
}

TEST_CASE("trivial lattices") {
  IntegerLattice lat;
  lat.ambient = 2;
  lat.basis = {{2, 0}, {0, 2}};
  CHECK(min_distance(lat, 10).value == 2);
  IntegerLattice bad = lat;
  bad.basis = {{1, 1}, {2, 2}};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("Craig lattices in A_n") {
  auto a = craig_lattice_An(2, 1, 3);
  CHECK(a.index() == 3);
  CHECK(min_distance(a, 6).value == 2);
  auto b = craig_lattice_An(2, 2, 3);
  CHECK(min_distance(b, 6).value >= 3);
  CHECK(design_degree_structural(b, 6) == 2);
  auto c = craig_lattice_An(4, 2, 5);
  CHECK(c.index() == 25);
  CHECK(min_distance(c, 6).value == 3);
  CHECK(min_distance_by_ball(c, 3) == 3);
  CHECK_THROWS(craig_lattice_An(4, 2, 4));
  CHECK_THROWS(craig_lattice_An(4, 2, 3));
}

TEST_CASE("skew Craig lattices in Z^n") {
  auto a = craig_lattice_Zn(2, 1, 5, false);
  CHECK(a.index() == 5);
  CHECK(min_distance(a, 6).value == 3);
  CHECK(oracle::min_l1(a.coord_basis(), 4) == 3);
  auto b = craig_lattice_Zn(3, 1, 7, false);
  CHECK(oracle::min_l1(b.coord_basis(), 3) >= 3);
  auto c = craig_lattice_Zn(4, 3, 11, true);
  CHECK(min_distance(c, 10).value >= 8);
  CHECK(design_degree_structural(c, 10) >= 7);
  CHECK_THROWS(craig_lattice_Zn(4, 1, 7, false));  // p must exceed 2n
  CHECK_THROWS(craig_lattice_Zn(3, 1, 9, false));  // not prime
}

TEST_CASE("Craig index divides p^t") {
  for (auto [n, t, p] : {std::tuple{2, 1, 5}, {3, 1, 7}, {4, 2, 11}, {4, 3, 11}, {6, 3, 13}, {5, 2, 11}}) {
    Int pt = 1;
    for (int i = 0; i < t; ++i) pt *= p;
    auto lat = craig_lattice_Zn(n, t, p, false);
    CHECK(mpz_divisible_p(pt.get_mpz_t(), lat.index().get_mpz_t()) != 0);
    auto boosted = craig_lattice_Zn(n, t, p, true);
    CHECK(boosted.index() == 2 * lat.index());
  }
}

TEST_CASE("structural degree against the brute-force oracle") {
  for (auto [n, t, p] : {std::tuple{2, 1, 5}, {3, 1, 7}, {4, 2, 11}}) {
    auto lat = craig_lattice_Zn(n, t, p, false);
    int oracle_min = oracle::min_l1(lat.coord_basis(), 2 * t + 2);
    CHECK(oracle_min >= 2 * t + 1);
    CHECK(min_distance(lat, 2 * t + 2).value == oracle_min);
  }
}

TEST_CASE("min_distance is invariant under unimodular changes of basis") {
  std::mt19937_64 rng(17);
  auto lat = craig_lattice_Zn(3, 1, 7, false);
  int base = min_distance(lat, 8).value;
  for (int trial = 0; trial < 10; ++trial) {
    IntegerLattice m = lat;
    for (int step = 0; step < 6; ++step) {
      std::size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      long k = static_cast<long>(rng() % 5) - 2;
      for (std::size_t c = 0; c < 3; ++c) m.basis[i][c] += k * m.basis[j][c];
    }
    CHECK(abs(determinant(m.basis)) == lat.index());
    CHECK(min_distance(m, 8).value == base);
  }
}

TEST_CASE("cap exceeded is reported") {
  auto lat = craig_lattice_Zn(4, 3, 11, true);
  auto r = min_distance(lat, 3);
  CHECK(r.exceeded);
  CHECK(r.value == -1);
  CHECK_THROWS(design_degree_structural(lat, 2));
}

TEST_CASE("hight bound") {
  CHECK(hight_bound(3, 6, ExactScalar::ratio(18, 19), ExactScalar::ratio(4, 3)) == ExactScalar(38));
  CHECK(hight_bound(2, 4, ExactScalar(1), ExactScalar(2)) == ExactScalar(8));
  CHECK(hight_bound(2, 2, ExactScalar(1), ExactScalar(2)) == ExactScalar(2));
}
