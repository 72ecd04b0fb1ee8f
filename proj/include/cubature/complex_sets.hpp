#pragma once

#include "cubature/formula.hpp"

#include <string>
#include <vector>

namespace cub {

enum class Ring { eisenstein, gaussian, real, cyclotomic };

// Vectors in C^m stored as 2m reals (re_1, im_1, re_2, im_2, ...), all of
// squared norm norm2. Eisenstein a + b*omega sits in Q(sqrt3) coordinates.
struct ComplexVectorSet {
  int m = 0;
  Ring ring = Ring::real;
  std::vector<ScalarVec> vectors;
  ExactScalar norm2 = 1;
  std::string name;
  std::size_t size() const { return vectors.size(); }
};

enum class E8Position { eisenstein, gaussian, real };

ComplexVectorSet e8_roots(E8Position pos);
ComplexVectorSet k12_short_vectors();
ComplexVectorSet bw16_short_vectors();
// Standard basis plus the q^2 quadratic-phase vectors, q an odd prime.
ComplexVectorSet mub_design(int q);

// Equal-weight formula on sphere(2m), keeping norm2 when it is not 1.
Formula sphere_formula(const ComplexVectorSet& s, std::optional<int> claimed = std::nullopt);

// Distinct complex lines, one unit representative each. Two vectors span the
// same line when z_j * conj(z_j0) agree for every j (j0 the first nonzero).
std::vector<ScalarVec> distinct_lines(const ComplexVectorSet& s);
// Line class of every vector (indices into *reps, in order of first appearance).
std::vector<std::size_t> line_classes(const ComplexVectorSet& s, std::vector<ScalarVec>* reps);
ComplexVectorSet lines_as_set(const ComplexVectorSet& s);

// Squared moduli |z_k|^2 / norm2 of each vector, merged into a formula on simplex(m-1).
Formula tau2_image(const ComplexVectorSet& s);

bool is_odd_prime(long q);

}  // namespace cub
