#pragma once

#include "cubature/monomials.hpp"
#include "cubature/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cub {

enum class SpaceKind {
  simplex,              // Delta_n, n+1 barycentric coordinates
  corner_simplex,       // Delta'_n = {x >= 0, sum x <= 1}
  sphere,               // S^{n-1} in R^n
  ball,                 // B_n
  trig_torus,           // [0,2pi)^n, coordinates stored as turns
  gaussian,             // density exp(-|x|^2)
  exponential_orthant,  // density exp(-sum x)
  jacobi_interval,      // (1-x)^a (1+x)^b on [-1,1]
  moment_interval,      // tabulated 1-d moments on [lo,hi]
};

// Norm on the character lattice of a torus space.
enum class TorusNorm { l1, an_root };

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::simplex;
  int dim = 0;
  int a = 0, b = 0;
  TorusNorm torus_norm = TorusNorm::l1;
  std::shared_ptr<const std::vector<Rat>> moments;  // moment_interval only
  Rat lo = -1, hi = 1;

  static SpaceDescriptor make(SpaceKind k, int n) {
    SpaceDescriptor s;
    s.kind = k;
    s.dim = n;
    return s;
  }
  static SpaceDescriptor simplex(int n) { return make(SpaceKind::simplex, n); }
  static SpaceDescriptor corner_simplex(int n) { return make(SpaceKind::corner_simplex, n); }
  static SpaceDescriptor sphere(int n) { return make(SpaceKind::sphere, n); }
  static SpaceDescriptor ball(int n) { return make(SpaceKind::ball, n); }
  static SpaceDescriptor torus(int n, TorusNorm norm = TorusNorm::l1);
  static SpaceDescriptor gaussian(int n) { return make(SpaceKind::gaussian, n); }
  static SpaceDescriptor exponential_orthant(int n) { return make(SpaceKind::exponential_orthant, n); }
  static SpaceDescriptor jacobi(int a, int b);
  static SpaceDescriptor tabulated(std::vector<Rat> moments, Rat lo, Rat hi);

  // Number of stored coordinates per point.
  int coord_count() const;
  bool is_torus() const { return kind == SpaceKind::trig_torus; }
  // Symmetries of the measure itself, used to decide whether a symmetry of
  // the point set may be used to skip monomials.
  bool sign_symmetric(int coord) const;
  bool permutation_symmetric() const;
  std::string name() const;

  friend bool operator==(const SpaceDescriptor& x, const SpaceDescriptor& y);
};

std::string kind_name(SpaceKind k);
SpaceKind kind_from_name(const std::string& s);

// Exact normalized moment of x^alpha.
Rat moment(const SpaceDescriptor& space, const ExponentVector& alpha);
// Normalized Haar integral of the character exp(i k.theta).
Rat trig_moment(const ExponentVector& k);

// Moments m_0..m_kmax of the normalized Jacobi weight on [-1,1].
std::vector<Rat> jacobi_moments(int a, int b, int kmax);

// Norm of a character index on an A_n torus given in root coordinates.
int an_root_norm_from_root_coords(const ExponentVector& c);
// Sum of positive entries of a zero-sum vector.
int an_root_norm(const ExponentVector& k);

}  // namespace cub
