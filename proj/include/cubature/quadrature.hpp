#pragma once

#include "cubature/formula.hpp"
#include "cubature/orthopoly.hpp"

namespace cub {

// Raw normalized moments m_0..m_kmax of a one-dimensional measure
// (jacobi_interval or moment_interval).
std::vector<Rat> interval_moments(const SpaceDescriptor& measure, int kmax);
Rat interval_lo(const SpaceDescriptor& measure);
Rat interval_hi(const SpaceDescriptor& measure);

// t nodes, exact to degree 2t-1; weights from the Christoffel formula
// w_j = h_{t-1} / (p_t'(x_j) p_{t-1}(x_j)).
Formula gauss_quadrature(const SpaceDescriptor& measure, int t, unsigned bits = kDefaultPrecision);

enum class EndpointRule { lobatto, radau };

// Degree-t rule with both endpoints ((t+3)/2 points, t odd) or the left
// endpoint ((t+2)/2 points, t even).
Formula lobatto_radau_quadrature(const SpaceDescriptor& measure, int t, EndpointRule kind,
                                 unsigned bits = kDefaultPrecision);

}  // namespace cub
