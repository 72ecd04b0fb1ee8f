#include "cubature/pipelines.hpp"

#include "cubature/catalog.hpp"
#include "cubature/quadrature.hpp"

#include <stdexcept>

namespace cub {

Formula sphere7_pipeline(int n) {
  Formula base = hadamard_simplex_formula(n);
  Formula f = twisted_product(base, default_fiber_designs(base, 7), 7);
  f.provenance = "Hadamard 3-cubature on simplex(" + std::to_string(n - 1) + ") lifted with 7-designs";
  return f;
}

std::size_t sphere7_count(int n) {
  Formula base = hadamard_simplex_formula(n);
  return twisted_product_count(base, default_fiber_designs(base, 7));
}

Formula s3_base(int s) {
  if (s < 1) throw std::invalid_argument("s3 family needs s >= 1");
  Formula q = lobatto_radau_quadrature(SpaceDescriptor::jacobi(0, 0), s,
                                       s % 2 ? EndpointRule::lobatto : EndpointRule::radau);
  Formula b;
  b.space = SpaceDescriptor::simplex(1);
  const ExactScalar half(frac(1, 2));
  for (std::size_t i = 0; i < q.size(); ++i) {
    const ExactScalar& x = q.points[i][0];
    b.points.push_back({half + half * x, half - half * x});
    b.weights.push_back(q.weights[i]);
  }
  b.claimed_degree = s;
  b.provenance = std::string(s % 2 ? "Lobatto" : "Radau") + " " + std::to_string(s) + "-quadrature on the 1-simplex";
  return b;
}

Formula s3_family(int s) {
  Formula base = s3_base(s);
  FiberDesigns d;
  d.emplace(1, circle_design(2 * s + 1));
  d.emplace(2, noskov_design(s + 1, true));
  return twisted_product(base, d, 2 * s + 1);
}

std::size_t s3_expected_count(int s) {
  const std::size_t u = static_cast<std::size_t>(s);
  return s % 2 ? (u + 1) * (u * u + 3) : (u + 1) * (u * u + u + 2);
}

Formula ball4_pipeline() {
  Formula base = named_formula("triangle-pb3");
  FiberDesigns d;
  d.emplace(1, circle_design(7));
  d.emplace(2, noskov_design(4, true));
  return twisted_product(base, d, 7);
}

Formula gauss4_pipeline() {
  Formula base = named_formula("exp2-pb4");
  FiberDesigns d;
  d.emplace(1, circle_design(9));
  d.emplace(2, noskov_design(5, true));
  return twisted_product(base, d, 9);
}

}  // namespace cub
