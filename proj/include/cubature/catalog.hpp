#pragma once

#include "cubature/complex_sets.hpp"
#include "cubature/formula.hpp"

#include <string>
#include <vector>

namespace cub {

struct SteinerSystem {
  int t = 0, k = 0, v = 0;
  std::vector<std::vector<int>> blocks;  // sorted k-subsets of {0..v-1}
  // every t-subset in exactly one block
  bool validate() const;
};

// (3,4,8) from the affine planes of (Z/2)^3; (5,6,12) from the PSL(2,11)
// orbit of {inf,1,3,4,5,9} on the projective line over F_11 (inf = 11).
SteinerSystem steiner(int t, int k, int v);

using SignMatrix = std::vector<std::vector<int>>;
SignMatrix sylvester_hadamard(int n);
SignMatrix paley_hadamard(int q);  // q prime, q = 3 mod 4; order q+1
SignMatrix hadamard_matrix(int n);  // throws when neither construction applies
bool is_hadamard(const SignMatrix& h);

// Corners, the two half-support barycenters of every non-constant row of a
// normalized Hadamard matrix, and the center.
Formula hadamard_simplex_formula(int n);

struct CatalogEntry {
  std::string id;
  std::string space;
  int degree = 0;
  std::string description;
  bool available = true;
};

const std::vector<CatalogEntry>& catalog_entries();
Formula named_formula(const std::string& id);

// The exp2-pb4 orbit structure filled with the 9-digit values as printed
// (kept to show they miss the mass moment).
Formula exp2_pb4_printed();

}  // namespace cub
