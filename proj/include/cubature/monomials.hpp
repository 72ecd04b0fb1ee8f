#pragma once

#include "cubature/scalar.hpp"

#include <vector>

namespace cub {

// Monomial exponents (all >= 0) or Fourier indices (any sign).
using ExponentVector = std::vector<int>;

enum class Parity { any, even };

int monomial_degree(const ExponentVector& a);
int l1_norm(const ExponentVector& k);

// All exponent vectors of total degree <= max_degree, in lexicographic order.
std::vector<ExponentVector> enumerate_monomials(int dim, int max_degree, Parity parity = Parity::any);

Int binomial(long n, long k);
Int factorial(long n);
Int double_factorial(long n);  // n!!, with (-1)!! = 0!! = 1

}  // namespace cub
