#pragma once

#include "cubature/measures.hpp"
#include "cubature/scalar.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace cub {

using IntMatrix = std::vector<std::vector<long>>;

// Full-rank sublattice of the character lattice of a torus.
// l1: rows are m vectors in Z^m.
// an_root: rows are m-1 zero-sum vectors in Z^m (a sublattice of A_{m-1}).
struct IntegerLattice {
  int ambient = 0;
  TorusNorm norm = TorusNorm::l1;
  IntMatrix basis;

  int rank() const { return norm == TorusNorm::l1 ? ambient : ambient - 1; }
  // Basis in torus coordinates: the rows themselves for l1, root coordinates
  // c_j = k_1 + ... + k_j for an_root.
  IntMatrix coord_basis() const;
  Int index() const;  // |det| of coord_basis
  void validate() const;
  SpaceDescriptor torus() const { return SpaceDescriptor::torus(rank(), norm); }
};

nlohmann::json lattice_to_json(const IntegerLattice& lat);
IntegerLattice lattice_from_json(const nlohmann::json& j);

// Exact determinant of a square integer matrix.
Int determinant(const IntMatrix& m);

// Row-style Hermite normal form: upper triangular, positive diagonal.
IntMatrix hermite_normal_form(const IntMatrix& rows);

// Diagonal d with U * B * V = diag(d), each d_i dividing d_{i+1}; v receives V.
std::vector<Int> smith_normal_form(const IntMatrix& b, std::vector<std::vector<Int>>* v = nullptr);

bool is_prime(long p);

// Lambda^(t)(A_n): zero-sum k in Z^{n+1} with sum_a k_a N_a^j = 0 mod p, j = 1..t.
IntegerLattice craig_lattice_An(int n, int t, long p, std::vector<long> index_set = {});
// Skew analogue in Z^n with odd powers a, a^3, ..., a^{2t-1}; boost_even
// passes to the even-sum sublattice.
IntegerLattice craig_lattice_Zn(int n, int t, long p, bool boost_even, std::vector<long> index_set = {});

// Smallest prime p > bound.
long next_prime_above(long bound);

// Norm of a lattice vector given in torus coordinates.
int torus_norm(TorusNorm norm, const std::vector<long>& c);

struct MinDistance {
  int value = -1;       // exact minimum when found
  bool exceeded = false;  // no nonzero vector of norm <= cap
  std::vector<long> witness;  // torus coordinates
};

// Exhaustive search over lattice points in the norm ball of radius cap.
MinDistance min_distance(const IntegerLattice& lat, int cap);

// Independent oracle: scan every character of norm <= radius and test
// lattice membership directly. Returns the smallest norm found, or -1.
int min_distance_by_ball(const IntegerLattice& lat, int radius);
bool contains(const IntegerLattice& lat, const std::vector<long>& c);

// min_distance - 1; throws when the minimum exceeds t_max + 1.
int design_degree_structural(const IntegerLattice& lat, int t_max);

// d^n volK / (2^n density).
ExactScalar hight_bound(int n, int d, const ExactScalar& density, const ExactScalar& volK);

}  // namespace cub
