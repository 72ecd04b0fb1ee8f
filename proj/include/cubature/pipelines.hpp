#pragma once

#include "cubature/fibrations.hpp"

namespace cub {

// Hadamard 3-cubature on simplex(n-1) lifted with 7-designs to sphere(2n).
Formula sphere7_pipeline(int n);
std::size_t sphere7_count(int n);

// Lobatto (odd s) or Radau (even s) s-quadrature on the 1-simplex lifted to
// a (2s+1)-cubature on sphere(4).
Formula s3_family(int s);
Formula s3_base(int s);
// (s+1)(s^2+3) for odd s, (s+1)(s^2+s+2) for even s.
std::size_t s3_expected_count(int s);

// Triangle PB 3-cubature lifted to a 7-cubature on ball(4).
Formula ball4_pipeline();
// Exponential PB 4-cubature lifted to a 9-cubature on gaussian(4).
Formula gauss4_pipeline();

}  // namespace cub
