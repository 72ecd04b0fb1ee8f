#pragma once

// Every formula the library builds, with the degree it is known to reach.

#include "cubature/catalog.hpp"
#include "cubature/complex_sets.hpp"
#include "cubature/fibrations.hpp"
#include "cubature/lattice.hpp"
#include "cubature/pipelines.hpp"
#include "cubature/torus.hpp"

#include <string>
#include <vector>

struct RepoFormula {
  std::string name;
  cub::Formula formula;
  int degree;
};

inline std::vector<RepoFormula> repo_formulas() {
  using namespace cub;
  std::vector<RepoFormula> out;
  for (const auto& e : catalog_entries())
    if (e.available) out.push_back({e.id, named_formula(e.id), e.degree});
  auto e8e = e8_roots(E8Position::eisenstein);
  out.push_back({"e8 eisenstein", sphere_formula(e8e), 7});
  out.push_back({"e8 gaussian", sphere_formula(e8_roots(E8Position::gaussian)), 7});
  out.push_back({"e8 real", sphere_formula(e8_roots(E8Position::real)), 7});
  out.push_back({"k12", sphere_formula(k12_short_vectors()), 5});
  out.push_back({"bw16", sphere_formula(bw16_short_vectors()), 7});
  for (int n : {2, 4, 8, 12}) out.push_back({"hadamard " + std::to_string(n), hadamard_simplex_formula(n), 3});
  for (int s = 1; s <= 7; ++s) out.push_back({"s3 " + std::to_string(s), s3_family(s), 2 * s + 1});
  out.push_back({"ball4", ball4_pipeline(), 7});
  out.push_back({"gauss4", gauss4_pipeline(), 7});
  out.push_back({"sphere7 4", sphere7_pipeline(4), 7});
  out.push_back({"mub lift", hopf_lift(mub_design(3), 2), 5});
  out.push_back({"e8 lift", hopf_lift(lines_as_set(e8e), 3), 7});
  for (int s = 1; s <= 8; ++s) {
    out.push_back({"noskov even " + std::to_string(s), noskov_design(s, true).formula, 2 * s - 1});
    out.push_back({"noskov odd " + std::to_string(s), noskov_design(s, false).formula, 2 * s});
  }
  for (int d = 2; d <= 12; ++d) out.push_back({"hex " + std::to_string(d), hex_design(d).formula, d - 1});
  for (auto [n, t, p] : {std::tuple{2, 1, 5}, {3, 1, 7}, {4, 2, 11}, {4, 3, 11}, {6, 3, 13}})
    out.push_back({"craig Z^" + std::to_string(n) + " t=" + std::to_string(t),
                   subgroup_points(craig_lattice_Zn(n, t, p, false)).formula, 2 * t});
  for (auto [n, t, p] : {std::tuple{2, 1, 5}, {3, 1, 7}, {4, 2, 11}, {6, 3, 13}})
    out.push_back({"craig even Z^" + std::to_string(n) + " t=" + std::to_string(t),
                   subgroup_points(craig_lattice_Zn(n, t, p, true)).formula, 2 * t + 1});
  for (auto [n, t, p] : {std::tuple{2, 1, 3}, {2, 2, 3}, {4, 2, 5}})
    out.push_back({"craig A_" + std::to_string(n) + " t=" + std::to_string(t),
                   subgroup_points(craig_lattice_An(n, t, p)).formula, t});
  return out;
}
