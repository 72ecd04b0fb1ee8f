#include "cubature/bounds.hpp"
#include "cubature/catalog.hpp"
#include "cubature/complex_sets.hpp"
#include "cubature/fibrations.hpp"
#include "cubature/pipelines.hpp"
#include "cubature/torus.hpp"

#include <cmath>
#include <sstream>

namespace cub {

namespace {

struct TableBuilder {
  std::vector<TableRow> rows;

  TableRow& count(std::string construction, std::string anchor, std::size_t expected, std::size_t achieved) {
    TableRow r;
    r.construction = std::move(construction);
    r.anchor = std::move(anchor);
    r.expected = std::to_string(expected);
    r.achieved = std::to_string(achieved);
    r.ok = expected == achieved;
    rows.push_back(std::move(r));
    return rows.back();
  }
};

void check_degree(TableRow& r, const Formula& f, int degree, VerifyMode mode, double tol = 1e-9) {
  VerifyOptions opt;
  opt.mode = mode;
  opt.tol = tol;
  r.degree = degree;
  r.degree_verified = verify(f, degree, opt).pass;
  r.ok = r.ok && *r.degree_verified;
}

}  // namespace

std::vector<TableRow> reproduction_table(const TableOptions& opt) {
  TableBuilder tb;

  const char* e8_names[] = {"e8 eisenstein", "e8 gaussian", "e8 real"};
  const E8Position e8_pos[] = {E8Position::eisenstein, E8Position::gaussian, E8Position::real};
  std::vector<ComplexVectorSet> e8;
  for (int i = 0; i < 3; ++i) {
    e8.push_back(e8_roots(e8_pos[i]));
    auto& r = tb.count(e8_names[i], "E8 roots", 240, e8.back().size());
    check_degree(r, sphere_formula(e8.back()), 7, VerifyMode::floating);
  }

  ComplexVectorSet k12 = k12_short_vectors();
  {
    auto& r = tb.count("k12 short vectors", "Coxeter-Todd minimal vectors", 756, k12.size());
    check_degree(r, sphere_formula(k12), 5, VerifyMode::floating);
  }
  ComplexVectorSet bw16 = bw16_short_vectors();
  {
    auto& r = tb.count("bw16 short vectors", "Barnes-Wall minimal vectors", 4320, bw16.size());
    if (opt.heavy) check_degree(r, sphere_formula(bw16), 7, VerifyMode::floating);
  }

  struct Named {
    const char* id;
    std::size_t expected;
    int degree;
  };
  for (const Named& n : {Named{"as-tetra-8", 8, 3}, Named{"as-tetra-11", 11, 3}, Named{"rains-delta3-8", 8, 3},
                         Named{"stroud-delta5-16", 16, 3}, Named{"bw-delta7-51", 51, 3},
                         Named{"rains-delta7-50", 50, 3}, Named{"leech-delta11-276", 276, 5}}) {
    Formula f = named_formula(n.id);
    auto& r = tb.count(n.id, "catalog", n.expected, f.size());
    check_degree(r, f, n.degree, VerifyMode::exact);
  }
  {
    Formula f = tau2_image(e8[0]);
    auto& r = tb.count("tau2(e8 eisenstein)", "8-point 3-simplex formula", 8, f.size());
    check_degree(r, f, 3, VerifyMode::exact);
  }
  {
    Formula f = tau2_image(e8[1]);
    auto& r = tb.count("tau2(e8 gaussian)", "11-point 3-simplex formula", 11, f.size());
    check_degree(r, f, 3, VerifyMode::exact);
  }
  {
    Formula f = tau2_image(k12);
    auto& r = tb.count("tau2(k12)", "16-point 5-simplex formula", 16, f.size());
    check_degree(r, f, 3, VerifyMode::exact);
  }
  {
    Formula f = tau2_image(bw16);
    auto& r = tb.count("tau2(bw16)", "51-point 7-simplex formula", 51, f.size());
    check_degree(r, f, 3, VerifyMode::exact);
  }

  for (int s = 1; s <= 8; ++s) {
    tb.count("noskov even s=" + std::to_string(s), "2s^2", 2ul * s * s, noskov_design(s, true).size());
    tb.count("noskov odd s=" + std::to_string(s), "s^2+(s+1)^2", 1ul * s * s + (s + 1ul) * (s + 1),
             noskov_design(s, false).size());
    tb.count("hex d=" + std::to_string(2 * s), "3s^2", 3ul * s * s, hex_design(2 * s).size());
    tb.count("hex d=" + std::to_string(2 * s + 1), "3s^2+3s+1", 3ul * s * s + 3ul * s + 1,
             hex_design(2 * s + 1).size());
  }

  for (int s = 1; s <= 7; ++s) {
    Formula f = s3_family(s);
    auto& r = tb.count("s3 s=" + std::to_string(s), s % 2 ? "(s+1)(s^2+3)" : "(s+1)(s^2+s+2)",
                       s3_expected_count(s), f.size());
    check_degree(r, f, 2 * s + 1, VerifyMode::floating);
  }
  {
    Formula f = ball4_pipeline();
    auto& r = tb.count("ball4-7pt", "triangle PB3 lift", 64, f.size());
    check_degree(r, f, 7, VerifyMode::floating);
  }
  {
    Formula f = gauss4_pipeline();
    auto& r = tb.count("gauss4-7pt", "exponential PB4 lift", 190, f.size());
    check_degree(r, f, 7, VerifyMode::floating, 1e-6);
  }
  {
    BoundReport b = stroud_mysovskikh_check(3, 5);
    std::size_t lc = b.lattice_count ? static_cast<std::size_t>(b.lattice_count->get_d() + 0.5) : 0;
    tb.count("T(SO(6)) degree 5 lattice count", "lattice bound", 38, lc);
  }

  for (int n : {4, 8, 12}) {
    Formula f = hadamard_simplex_formula(n);
    auto& r = tb.count("hadamard-simplex n=" + std::to_string(n), "3n-1", 3ul * n - 1, f.size());
    check_degree(r, f, 3, VerifyMode::exact);
  }

  {
    Formula f = hopf_lift(mub_design(3), 2);
    auto& r = tb.count("hopf lift mub(3)", "MUB lift on S^5", 72, f.size());
    check_degree(r, f, 5, VerifyMode::exact);
  }
  {
    Formula f = hopf_lift(lines_as_set(e8[0]), 3);
    auto& r = tb.count("hopf lift e8 eisenstein lines", "E8 lift on S^7", 320, f.size());
    check_degree(r, f, 7, VerifyMode::floating);
  }

  for (int n : {4, 8, 12}) {
    std::size_t c = sphere7_count(n);
    double ratio = static_cast<double>(c) / (4.0 * std::pow(n, 4));
    std::ostringstream os;
    os.precision(3);
    os << c << " (ratio " << std::fixed << ratio << ")";
    TableRow r;
    r.construction = "sphere7 n=" + std::to_string(n);
    r.anchor = "4n^4 growth";
    r.expected = "ratio in [0.5, 3]";
    r.achieved = os.str();
    r.ok = ratio >= 0.5 && ratio <= 3;
    if (n == 4 || (n == 8 && opt.heavy)) {
      Formula f = sphere7_pipeline(n);
      r.ok = r.ok && f.size() == c;
      check_degree(r, f, 7, VerifyMode::floating);
    }
    tb.rows.push_back(std::move(r));
  }
  return tb.rows;
}

}  // namespace cub
