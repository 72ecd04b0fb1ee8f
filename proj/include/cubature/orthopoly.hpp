#pragma once

#include "cubature/scalar.hpp"

#include <vector>

namespace cub {

// Jacobi polynomial with exact rational coefficients, lowest degree first.
// Normalized so that P(1) = binomial(t + a, t).
struct OrthoPoly {
  int a = 0, b = 0;
  int degree = 0;
  std::vector<Rat> coeffs;

  const Rat& leading() const { return coeffs.back(); }
  Rat operator()(const Rat& x) const;
  BigFloat operator()(const BigFloat& x) const;
};

OrthoPoly jacobi_poly(int a, int b, int t);

// Exact inner product of two polynomials against the normalized
// (1-x)^a (1+x)^b weight on [-1,1].
Rat jacobi_inner(const OrthoPoly& p, const OrthoPoly& q);

// Monic three-term recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1},
// beta_0 the total mass.
struct Recurrence {
  std::vector<Rat> alpha, beta;
  int size() const { return static_cast<int>(alpha.size()); }
};

Recurrence jacobi_recurrence(int a, int b, int n);
// Chebyshev algorithm on raw moments m_0..m_{2n-1}; exact, throws when the
// Hankel matrix is singular or the sequence is not positive definite.
Recurrence recurrence_from_moments(const std::vector<Rat>& m, int n);

// p_t and p_t' (and optionally p_{t-1}) at x from the monic recurrence.
void eval_monic(const Recurrence& r, int t, const BigFloat& x, BigFloat& p, BigFloat& dp, BigFloat* prev = nullptr);

// Zeros of the degree-t monic orthogonal polynomial, all inside (lo, hi).
std::vector<BigFloat> recurrence_zeros(const Recurrence& r, int t, const Rat& lo, const Rat& hi, unsigned bits);

std::vector<BigFloat> jacobi_zeros(int a, int b, int t, unsigned bits = kDefaultPrecision);

}  // namespace cub
