#pragma once

#include "cubature/formula.hpp"
#include "cubature/lattice.hpp"

#include <optional>

namespace cub {

// Equal-weight design on a trig torus. Points are rational turns in [0,1).
struct TorusDesign {
  Formula formula;
  std::optional<IntegerLattice> lattice;
  int degree = 0;  // claimed trig degree
  std::size_t size() const { return formula.size(); }
};

// The finite dual subgroup of the lattice, one point per coset, from the
// Smith normal form. |points| = index.
TorusDesign subgroup_points(const IntegerLattice& lat, std::optional<int> claimed_degree = std::nullopt);

IntegerLattice noskov_lattice(int s, bool even);
// even: d = 2s, 2s^2 points, degree 2s-1; odd: d = 2s+1, s^2+(s+1)^2 points, degree 2s.
TorusDesign noskov_design(int s, bool even);

// Ideal of floor(d/2) - omega*floor((d+1)/2) in Z[omega], as a sublattice of A_2
// in root coordinates (x + y*omega <-> (x, y)).
IntegerLattice hex_lattice(int d);
TorusDesign hex_design(int d);

// 2*ceil((s+1)/2) equally spaced turns on the circle: an s-design.
TorusDesign circle_design(int s);

// Design of trig degree s on T(SO(2m)) (l1 norm): circle for m = 1, Noskov
// d = s+1 for m = 2, boosted Craig lattice beyond.
TorusDesign default_fiber_design(int m, int s);

// Rotate every point by a fixed offset (turns), keeping the design property.
TorusDesign shifted(const TorusDesign& d, const std::vector<Rat>& offset);

}  // namespace cub
