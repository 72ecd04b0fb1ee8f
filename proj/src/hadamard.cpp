#include "cubature/catalog.hpp"

#include <stdexcept>

namespace cub {

SignMatrix sylvester_hadamard(int n) {
  if (n < 1 || (n & (n - 1))) throw std::invalid_argument("Sylvester order must be a power of 2");
  SignMatrix h{{1}};
  while (static_cast<int>(h.size()) < n) {
    const std::size_t m = h.size();
    SignMatrix g(2 * m, std::vector<int>(2 * m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        g[i][j] = g[i][j + m] = g[i + m][j] = h[i][j];
        g[i + m][j + m] = -h[i][j];
      }
    h = std::move(g);
  }
  return h;
}

SignMatrix paley_hadamard(int q) {
  if (!is_odd_prime(q) || q % 4 != 3) throw std::invalid_argument("Paley construction needs a prime q = 3 mod 4");
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (long x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  const int n = q + 1;
  SignMatrix h(n, std::vector<int>(n, 1));
  // H = I + S with S the bordered Jacobsthal matrix
  for (int i = 1; i < n; ++i) {
    h[i][0] = -1;
    for (int j = 1; j < n; ++j) h[i][j] = i == j ? 1 : chi[((j - i) % q + q) % q];
  }
  return h;
}

bool is_hadamard(const SignMatrix& h) {
  const std::size_t n = h.size();
  for (const auto& r : h)
    if (r.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += h[i][k] * h[j][k];
      if (s != (i == j ? static_cast<long>(n) : 0)) return false;
    }
  return true;
}

SignMatrix hadamard_matrix(int n) {
  SignMatrix h;
  if (n >= 1 && !(n & (n - 1))) h = sylvester_hadamard(n);
  else if (is_odd_prime(n - 1) && (n - 1) % 4 == 3) h = paley_hadamard(n - 1);
  else throw std::invalid_argument("no Hadamard construction for order " + std::to_string(n));
  if (!is_hadamard(h)) throw std::logic_error("Hadamard construction failed");
  return h;
}

Formula hadamard_simplex_formula(int n) {
  if (n < 2) throw std::invalid_argument("Hadamard order must be at least 2");
  SignMatrix h = hadamard_matrix(n);
  // scale columns so that row 0 is all ones
  for (int j = 0; j < n; ++j)
    if (h[0][j] < 0)
      for (int i = 0; i < n; ++i) h[i][j] = -h[i][j];
  Formula f;
  f.space = SpaceDescriptor::simplex(n - 1);
  const long n1 = n + 1, n2 = n + 2;
  for (int i = 0; i < n; ++i) {
    ScalarVec p(n, ExactScalar(0));
    p[i] = 1;
    f.points.push_back(p);
    f.weights.push_back(ExactScalar(frac(2, static_cast<long>(n) * n1 * n2)));
  }
  for (int r = 1; r < n; ++r)
    for (int sgn : {1, -1}) {
      ScalarVec p(n, ExactScalar(0));
      for (int j = 0; j < n; ++j)
        if (h[r][j] == sgn) p[j] = ExactScalar(frac(2, n));
      f.points.push_back(p);
      f.weights.push_back(ExactScalar(frac(n, 2 * n1 * n2)));
    }
  f.points.push_back(ScalarVec(n, ExactScalar(frac(1, n))));
  f.weights.push_back(ExactScalar(frac(4L * n, n1 * n2)));
  f.claimed_degree = 3;
  f.provenance = "Hadamard simplex formula, order " + std::to_string(n);
  return f;
}

}  // namespace cub
