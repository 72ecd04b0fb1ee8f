#pragma once

#include "cubature/complex_sets.hpp"
#include "cubature/formula.hpp"
#include "cubature/torus.hpp"

#include <functional>
#include <map>
#include <vector>

namespace cub {

// moment_pi and tau2 both send a point to its squared moduli (|z_1|^2, ...);
// moment_pi reads a sphere(2n+2) formula as line representatives in CP^n.
// height is the last coordinate of sphere(3) onto [-1,1].
enum class FiberKind { moment_pi, hopf, tau1, tau2, height };

struct FiberMap {
  FiberKind kind = FiberKind::tau2;
  SpaceDescriptor source;
  SpaceDescriptor target;
};

// Builds the map from a source space, filling in the target.
FiberMap fiber_map(FiberKind kind, const SpaceDescriptor& source);

// Pushes points forward and merges. The claimed degree is kept for height,
// halved (rounded down) for the quadratic maps. tau1 lands on the simplex
// with a non-uniform density, so no degree is claimed.
Formula project_formula(const Formula& f, const FiberMap& map);

struct FiberProfile {
  std::vector<std::vector<int>> zero_coords;  // per base point
  std::vector<bool> generic;
};

FiberProfile fiber_profile(const Formula& base);

// Subtorus dimensions (nonzero-coordinate counts) among the base points.
std::vector<int> needed_subtorus_dims(const Formula& base);

using FiberDesigns = std::map<int, TorusDesign>;

FiberDesigns default_fiber_designs(const Formula& base, int s);

struct TwistOptions {
  // Per-fiber rotation (turns) for base point i on an m-torus; off when empty.
  std::function<std::vector<Rat>(std::size_t, int)> rotation;
  bool parallel = true;
};

// Base on simplex(n-1) -> sphere(2n); corner_simplex(n) -> ball(2n);
// exponential_orthant(n) -> gaussian(2n). Coordinates k of a base point
// become the pair sqrt(y_k) (cos 2 pi theta_j, sin 2 pi theta_j).
Formula twisted_product(const Formula& base, const FiberDesigns& designs, int s, const TwistOptions& opt = {});

// Point count without building the formula.
std::size_t twisted_product_count(const Formula& base, const FiberDesigns& designs);

// Every line times the 2t+2 roots of unity, equal weights.
Formula hopf_lift(const ComplexVectorSet& lines, int t);

}  // namespace cub
