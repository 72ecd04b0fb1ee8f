#include "cubature/monomials.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cub {

int monomial_degree(const ExponentVector& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

int l1_norm(const ExponentVector& k) {
  int d = 0;
  for (int e : k) d += std::abs(e);
  return d;
}

namespace {

void fill(int pos, int left, int step, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (pos == static_cast<int>(cur.size())) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; e += step) {
    cur[pos] = e;
    fill(pos + 1, left - e, step, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(int dim, int max_degree, Parity parity) {
  if (dim < 1 || max_degree < 0) throw std::invalid_argument("enumerate_monomials: dim >= 1 and max_degree >= 0");
  std::vector<ExponentVector> out;
  ExponentVector cur(dim, 0);
  fill(0, max_degree, parity == Parity::even ? 2 : 1, cur, out);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace cub
