#pragma once

// Test-side lattice membership and minimum distance by brute force.

#include "cubature/lattice.hpp"

#include <functional>

namespace oracle {

// Solve c = y B over Q and check y is integral.
inline bool member(const cub::IntMatrix& basis, const std::vector<long>& c) {
  const std::size_t n = basis.size();
  // columns: unknown y_i; rows: coordinates j
  std::vector<std::vector<cub::Rat>> a(n, std::vector<cub::Rat>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = basis[i][j];
    a[j][n] = c[j];
  }
  for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
    std::size_t piv = row;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      cub::Rat f = a[r][col] / a[row][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    cub::Rat y = a[r][n] / a[r][r];
    if (y.get_den() != 1) return false;
  }
  return true;
}

inline int l1(const std::vector<long>& c) {
  int s = 0;
  for (long v : c) s += static_cast<int>(v < 0 ? -v : v);
  return s;
}

// Smallest l1 norm of a nonzero lattice vector, scanning the l1 ball of the
// given radius; -1 when none is found.
inline int min_l1(const cub::IntMatrix& basis, int radius) {
  const int n = static_cast<int>(basis.size());
  int best = -1;
  std::vector<long> c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      int norm = l1(c);
      if (norm == 0 || (best >= 0 && norm >= best)) return;
      if (member(basis, c)) best = norm;
      return;
    }
    for (long v = -left; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - static_cast<int>(v < 0 ? -v : v));
    }
    c[i] = 0;
  };
  rec(0, radius);
  return best;
}

}  // namespace oracle
