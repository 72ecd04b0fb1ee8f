#pragma once

#include "cubature/formula.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cub {

struct BoundReport {
  std::string name;
  std::string space;
  int degree = 0;
  Int value = 1;
  std::optional<std::size_t> formula_size;
  std::optional<double> slack;               // |F| / value
  std::optional<double> asymptotic;          // leading term, when one is quoted
  std::optional<Rat> lattice_count;          // d^n vol K / (2^n density) when the density is known
  bool satisfied() const { return !formula_size || Int(static_cast<unsigned long>(*formula_size)) >= value; }
};

// Dimension of the polynomials (characters) of degree <= two_t / 2 on the space.
// Simplex, corner simplex, ball, gaussian and orthant: binomial(n+t, n);
// sphere(n) (S^{n-1}): binomial(n+t-1, t) + binomial(n+t-2, t-1); intervals: t+1;
// tori: characters of norm <= t.
Int stroud_bound(const SpaceDescriptor& space, int two_t);

// 2 binomial(n-1+t, t) for degree 2t+1 on S^n.
Int moller_sphere_bound(int n, int degree);

// binomial(n+t, n) binomial(n+t+1, n) for (2t+1)-cubature on CP^n.
Int cpn_bound(int n, int t);

// |Delta^(a) - Delta^(b)| in Z^{n+1} with a = b = t/2 (t even) or
// a = (t+1)/2, b = (t-1)/2 (t odd), by enumeration with hashing.
Int psu_torus_bound(int n, int t, std::size_t cap = 50000000);
// n^t / (ceil(t/2)! floor(t/2)!)
double psu_torus_asymptotic(int n, int t);

// #{k in Z^n : |k|_1 <= r}
Int l1_ball_count(int n, int r);
// #{k in Z^n : |k|_1 <= r, |k|_1 = r mod 2}
Int l1_parity_count(int n, int r);
// #{zero-sum k in Z^{n+1} : sum of positive parts <= r}, by a closed sum.
Int an_root_ball_count(int n, int r);

// Stroud bound (even degree) or its centrally symmetric doubling (odd) on
// T(SO(2n)), with the leading term and, for n <= 3, the lattice count.
BoundReport stroud_mysovskikh_check(int n, int degree, std::optional<std::size_t> formula_size = std::nullopt);

// Every closed-form bound that applies to the formula's space at this degree.
std::vector<BoundReport> applicable_bounds(const Formula& f, int degree);

BoundReport cpn_check(int n, int t, std::size_t lines);

// ---- local optimality ----

struct SharpReport {
  int degree = 0;
  int k = 0;  // Gauss nodes compared against
  std::vector<BigFloat> gauss_nodes, gauss_weights;
  bool occupancy = true;
  bool tail = true;
  bool left_equality = false;  // left tail weight equals w_1
  BigFloat left_tail = 0, right_tail = 0;
  std::vector<std::string> violations;
  bool pass() const { return occupancy && tail; }
};

// Positive formula on an interval measure, exact at `degree`. Compares with
// the floor((degree+1)/2)-point Gauss rule: a node in each (p_{j-1}, p_j] and
// [p_j, p_{j+1}), tail weights at most w_1 and w_k.
SharpReport sharp_check(const Formula& f, int degree, double tol = 1e-9);

// A positive rule exact at `degree`: a random convex combination of two Gauss
// rules, nudged along the null space of its moment matrix.
Formula perturbed_positive_rule(const SpaceDescriptor& measure, int degree, std::uint64_t seed);

// arccos(sum sqrt(p_i q_i)) on barycentric points.
BigFloat simplex_distance(const ScalarVec& p, const ScalarVec& q);
double simplex_distance(const std::vector<double>& p, const std::vector<double>& q);

struct EpsNetReport {
  int t = 0;
  BigFloat highest_zero = 0;
  BigFloat epsilon = 0;
  double worst = 0;  // largest sampled distance to the nearest node
  bool covered = false;
  std::size_t samples = 0;
};

// eps with cos 2 eps the highest zero of P^(n-1,0)_t, t = floor((degree+1)/2).
BigFloat epsnet_radius(int n, int t);
// Halton samples (offset by the seed) pushed to the simplex through -log.
EpsNetReport epsnet_check(const Formula& f, int degree, std::size_t samples = 100000, std::uint64_t seed = 0);

struct ChristoffelTable {
  int n = 0;
  std::vector<int> t;
  std::vector<BigFloat> weight;  // Gauss weight at the highest node of jacobi(n-1, 0)
  double slope = 0;              // least-squares slope of log w against log t
  double shifted_slope = 0;      // the same against log(t + n/2)
};

ChristoffelTable christoffel_scaling(int n, const std::vector<int>& ts);

// ---- reproduction table ----

struct TableRow {
  std::string construction;
  std::string anchor;
  std::string expected;
  std::string achieved;
  std::optional<int> degree;           // claimed degree checked
  std::optional<bool> degree_verified;
  bool ok = false;
};

struct TableOptions {
  bool heavy = false;  // also verify the large lifts and BW16 on S^15
};

std::vector<TableRow> reproduction_table(const TableOptions& opt = {});

}  // namespace cub
