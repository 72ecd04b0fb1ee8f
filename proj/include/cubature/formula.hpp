#pragma once

#include "cubature/measures.hpp"
#include "cubature/monomials.hpp"
#include "cubature/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cub {

struct Formula {
  SpaceDescriptor space;
  std::vector<ScalarVec> points;
  ScalarVec weights;
  std::optional<int> claimed_degree;
  std::string provenance;
  // Sphere formulas may keep unnormalized points q with |q|^2 = norm2 for
  // every point; the represented point is q / sqrt(norm2).
  std::optional<ExactScalar> norm2;

  std::size_t size() const { return points.size(); }
  ExactScalar total_weight() const;
  // 0 rational, d for Q(sqrt d), -1 when any datum is a bigfloat.
  long field() const;
  bool is_exact() const { return field() >= 0; }
  void validate() const;
  // Coordinates of point i with norm2 divided out (bigfloat when needed).
  ScalarVec normalized_point(std::size_t i) const;
};

enum class VerifyMode { exact, floating };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exact;
  double tol = 1e-10;
  // Float evaluation width: 53 double, 64 long double, larger selects MPFR.
  unsigned eval_bits = 64;
  bool prune = true;
  bool parallel = true;
};

struct SymmetryInfo {
  bool central = false;
  std::vector<int> flips;                            // coordinates with a certified sign flip
  std::vector<std::vector<int>> components;          // certified full permutation blocks
};

struct Residual {
  ExponentVector alpha;
  double magnitude = 0;  // |sum - moment|
  bool exact_zero = false;
  std::string value;     // exact residual text in exact mode
};

struct VerificationReport {
  int degree = 0;
  VerifyMode mode = VerifyMode::exact;
  bool pass = false;
  double worst = 0;
  ExponentVector worst_alpha;
  std::size_t monomial_count = 0;   // characters for tori
  std::size_t evaluated_count = 0;  // after symmetry pruning
  int lowest_failing_degree = -1;
  std::vector<Residual> failures;   // capped at kMaxListedFailures
  static constexpr std::size_t kMaxListedFailures = 256;
  SymmetryInfo symmetry;
};

VerificationReport verify(const Formula& f, int t, const VerifyOptions& opt = {});
// Largest t <= t_max with a passing verify, -1 when t = 0 already fails.
int max_degree(const Formula& f, int t_max, const VerifyOptions& opt = {});

// Symmetries of the weighted point multiset that the measure shares.
SymmetryInfo certify_symmetries(const Formula& f);

// Merge equal points (exact equality) and drop zero weights.
Formula merge_duplicates(const Formula& f);

// x -> y with y[i] = sign[i] * x[perm[i]].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  static SignedPerm from_cycles(int n, const std::vector<std::vector<int>>& cycles_one_based);
  ScalarVec apply(const ScalarVec& x) const;
};

Formula orbit_symmetrize(const SpaceDescriptor& space, const std::vector<ScalarVec>& seeds,
                         const ScalarVec& seed_weights, const std::vector<SignedPerm>& gens,
                         std::size_t cap = 10000000);

struct Classification {
  bool positive = false;
  bool negative = false;
  bool equal_weight = false;
  bool interior = false;
  bool boundary = false;
  bool exterior = false;
  std::string label() const;  // PI / PB / EI / EB / ...
};

Classification classify(const Formula& f);

struct CpDesignResult {
  bool pass = false;
  std::size_t lines = 0;
  int complex_dim = 0;
  std::string average;  // exact text, or decimal in float mode
  std::string target;
  double deviation = 0;
};

// Welch-criterion check for equal-weight lines in C^n. Each line is given as
// 2n reals (re_1, im_1, re_2, im_2, ...) of unit norm.
CpDesignResult cp_design_check(const std::vector<ScalarVec>& lines, int t, double tol = 1e-10);

// Stable text key of a scalar vector (exact) used for hashing.
std::string exact_key(const ScalarVec& v);

}  // namespace cub
