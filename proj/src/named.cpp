#include "cubature/catalog.hpp"

#include <stdexcept>

namespace cub {

namespace {

ExactScalar q(long p, long r = 1) { return ExactScalar(frac(p, r)); }

ExactScalar bf(const char* s) { return ExactScalar::bigfloat(BigFloat(s)); }

SignedPerm cycles(int n, const std::vector<std::vector<int>>& c) { return SignedPerm::from_cycles(n, c); }

std::vector<SignedPerm> symmetric_group(int n) {
  std::vector<SignedPerm> g{cycles(n, {{1, 2}})};
  if (n > 2) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    g.push_back(cycles(n, {all}));
  }
  return g;
}

Formula finish(Formula f, int degree, const std::string& prov) {
  f.claimed_degree = degree;
  f.provenance = prov;
  f.validate();
  return f;
}

Formula octahedron() {
  Formula f;
  f.space = SpaceDescriptor::sphere(3);
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      ScalarVec p(3, ExactScalar(0));
      p[i] = s;
      f.points.push_back(p);
      f.weights.push_back(q(1, 6));
    }
  return finish(f, 3, "octahedron vertices");
}

Formula cube() {
  Formula f;
  f.space = SpaceDescriptor::sphere(3);
  for (int m = 0; m < 8; ++m) {
    ScalarVec p;
    for (int k = 0; k < 3; ++k) p.push_back((m >> k) & 1 ? -1 : 1);
    f.points.push_back(p);
    f.weights.push_back(q(1, 8));
  }
  f.norm2 = ExactScalar(3);
  return finish(f, 3, "cube vertices");
}

Formula icosahedron() {
  Formula f;
  f.space = SpaceDescriptor::sphere(3);
  const ExactScalar phi = ExactScalar::quadratic(frac(1, 2), frac(1, 2), 5);
  for (int r = 0; r < 3; ++r)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        ScalarVec p(3, ExactScalar(0));
        p[(r + 1) % 3] = s1;
        p[(r + 2) % 3] = s2 < 0 ? -phi : phi;
        f.points.push_back(p);
        f.weights.push_back(q(1, 12));
      }
  f.norm2 = ExactScalar(1) + phi * phi;
  return finish(f, 5, "icosahedron vertices");
}

Formula rains_delta3() {
  const ExactScalar a = ExactScalar::quadratic(frac(5, 10), frac(-1, 10), 5);
  const ExactScalar b = ExactScalar::quadratic(frac(5, 10), frac(1, 10), 5);
  const ExactScalar c = ExactScalar::quadratic(frac(3, 10), frac(1, 10), 5);
  const ExactScalar d = ExactScalar::quadratic(frac(3, 10), frac(-1, 10), 5);
  std::vector<ScalarVec> seeds = {{0, 0, a, b}, {q(1, 5), q(1, 5), c, d}};
  Formula f = orbit_symmetrize(SpaceDescriptor::simplex(3), seeds, {q(1, 24), q(5, 24)},
                               {cycles(4, {{3, 4}}), cycles(4, {{1, 3}, {2, 4}})});
  return finish(f, 3, "E8 roots projected along the C5 x C5 eigenplanes (Rains)");
}

Formula stroud_delta5() {
  std::vector<ScalarVec> seeds = {{q(1, 2), q(1, 2), 0, 0, 0, 0}, ScalarVec(6, q(1, 6))};
  Formula f = orbit_symmetrize(SpaceDescriptor::simplex(5), seeds, {q(1, 42), q(27, 42)}, symmetric_group(6));
  return finish(f, 3, "Stroud 3-cubature on the 5-simplex (K12 projection)");
}

Formula bw_delta7() {
  Formula f;
  f.space = SpaceDescriptor::simplex(7);
  for (int i = 0; i < 8; ++i) {
    ScalarVec p(8, ExactScalar(0));
    p[i] = 1;
    f.points.push_back(p);
    f.weights.push_back(q(1, 1080));
  }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      ScalarVec p(8, ExactScalar(0));
      p[i] = p[j] = q(1, 2);
      f.points.push_back(p);
      f.weights.push_back(q(1, 270));
    }
  // the quarter points follow the blocks of S(3,4,8)
  for (const auto& b : steiner(3, 4, 8).blocks) {
    ScalarVec p(8, ExactScalar(0));
    for (int i : b) p[i] = q(1, 4);
    f.points.push_back(p);
    f.weights.push_back(q(4, 135));
  }
  f.points.push_back(ScalarVec(8, q(1, 8)));
  f.weights.push_back(q(64, 135));
  return finish(f, 3, "Barnes-Wall short vectors projected to the 7-simplex");
}

Formula rains_delta7() {
  auto v = [](std::initializer_list<long> xs) {
    ScalarVec p;
    for (long x : xs) p.push_back(q(x, 12));
    return p;
  };
  // p4 carries the corrected third entry (0 instead of 4)
  std::vector<ScalarVec> seeds = {v({12, 0, 0, 0, 0, 0, 0, 0}), v({3, 3, 3, 3, 0, 0, 0, 0}),
                                  v({4, 4, 0, 0, 4, 0, 0, 0}), v({4, 0, 0, 0, 1, 1, 3, 3}),
                                  v({4, 0, 4, 0, 1, 1, 1, 1}), v({3, 1, 3, 1, 1, 1, 1, 1}),
                                  v({3, 1, 1, 1, 1, 1, 3, 1})};
  ScalarVec w = {q(1, 720), q(1, 90), q(1, 80), q(1, 60), q(1, 40), q(1, 30), q(1, 30)};
  Formula f = orbit_symmetrize(SpaceDescriptor::simplex(7), seeds, w,
                               {cycles(8, {{1, 2}}), cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
                                cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}})});
  return finish(f, 3, "Barnes-Wall lattice in an Eisenstein position projected to the 7-simplex (Rains)");
}

Formula leech_delta11() {
  Formula f;
  f.space = SpaceDescriptor::simplex(11);
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      ScalarVec p(12, ExactScalar(0));
      p[i] = p[j] = q(1, 2);
      f.points.push_back(p);
      f.weights.push_back(q(1, 10920));
    }
  for (const auto& b : steiner(5, 6, 12).blocks) {
    ScalarVec p(12, ExactScalar(0));
    for (int i : b) p[i] = q(1, 6);
    f.points.push_back(p);
    f.weights.push_back(q(9, 3640));
  }
  for (int i = 0; i < 12; ++i) {
    ScalarVec p(12, q(1, 18));
    p[i] = q(7, 18);
    f.points.push_back(p);
    f.weights.push_back(q(27, 1820));
  }
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      ScalarVec p(12, q(1, 18));
      p[i] = p[j] = q(4, 18);
      f.points.push_back(p);
      f.weights.push_back(q(27, 3640));
    }
  return finish(f, 5, "complex Leech lattice short vectors projected to the 11-simplex");
}

Formula triangle_pb3() {
  Formula f;
  f.space = SpaceDescriptor::corner_simplex(2);
  f.points.push_back({q(2, 5), q(2, 5)});
  f.weights.push_back(q(25, 48));
  for (int s : {-1, 1}) {
    ExactScalar x = ExactScalar::quadratic(frac(16, 25), frac(2 * s, 25), 14);
    ExactScalar w = ExactScalar::quadratic(frac(161, 1344), frac(-17 * s, 1344), 14);
    f.points.push_back({x, 0});
    f.weights.push_back(w);
    f.points.push_back({0, x});
    f.weights.push_back(w);
  }
  return finish(f, 3, "PB 3-cubature on the triangle");
}

Formula exp2_structure(const ExactScalar& x1, const ExactScalar& a, const ExactScalar& b, const ExactScalar& x3,
                       const ExactScalar& x4, const ScalarVec& w) {
  Formula f;
  f.space = SpaceDescriptor::exponential_orthant(2);
  f.points = {{x1, x1}, {a, b}, {b, a}, {x3, 0}, {0, x3}, {x4, 0}, {0, x4}};
  f.weights = {w[0], w[1], w[1], w[2], w[2], w[3], w[3]};
  return f;
}

Formula exp2_pb4() {
  Formula f = exp2_structure(bf("1.389428256534663494111008949196894061458"),
                             bf("5.556772138060483631490785698692375192656"),
                             bf("1.7188462006606635206361017482901394808"),
                             bf("0.8188789121273697891140193156394862325944"),
                             bf("3.765618570547650119000013227692365460588"),
                             {bf("0.3773298429570226564816940851121197967434"),
                              bf("0.01421599327774203722496488122989756727991"),
                              bf("0.2533444141078776674820050400842313446637"),
                              bf("0.04377467113586896705218303612981118968472")});
  return finish(f, 4, "PB 4-cubature for exponential measure on the quarter plane");
}

Formula tau2_named(E8Position pos, const std::string& prov) {
  Formula f = tau2_image(e8_roots(pos));
  return finish(f, 3, prov);
}

}  // namespace

Formula exp2_pb4_printed() {
  Formula f = exp2_structure(bf("1.50766353"), bf("6.29508677"), bf("1.76717584"), bf("0.285606152"),
                             bf("3.27491992"),
                             {bf("0.354104443"), bf("0.00876905581"), bf("0.556110610"), bf("0.0722468398")});
  return finish(f, 4, "exp2-pb4 as printed (9 digits)");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"platonic-octa", "sphere(3)", 3, "octahedron, 6 points", true},
      {"platonic-cube", "sphere(3)", 3, "cube, 8 points", true},
      {"platonic-icosa", "sphere(3)", 5, "icosahedron, 12 points over Q(sqrt5)", true},
      {"as-tetra-8", "simplex(3)", 3, "E8 Eisenstein roots through tau2, 8 points", true},
      {"as-tetra-11", "simplex(3)", 3, "E8 Gaussian roots through tau2, 11 points", true},
      {"rains-delta3-8", "simplex(3)", 3, "E8 along C5 x C5 eigenplanes, 8 points over Q(sqrt5)", true},
      {"stroud-delta5-16", "simplex(5)", 3, "K12 through tau2, 16 points", true},
      {"bw-delta7-51", "simplex(7)", 3, "Barnes-Wall through tau2, 51 points, Steiner-patterned", true},
      {"bw-delta7-23", "simplex(7)", 3, "reduced Barnes-Wall formula, weights not published", false},
      {"rains-delta7-50", "simplex(7)", 3, "Barnes-Wall Eisenstein position, 50 points", true},
      {"leech-delta11-276", "simplex(11)", 5, "complex Leech lattice, 276 points", true},
      {"rains-delta11-498", "simplex(11)", 5, "Leech (Z/5)^3 eigenplanes, data not published", false},
      {"triangle-pb3", "corner_simplex(2)", 3, "PB triangle formula over Q(sqrt14), 5 points", true},
      {"exp2-pb4", "exponential_orthant(2)", 4, "PB exponential formula, 7 points, 40 digits", true},
  };
  return entries;
}

Formula named_formula(const std::string& id) {
  if (id == "platonic-octa") return octahedron();
  if (id == "platonic-cube") return cube();
  if (id == "platonic-icosa") return icosahedron();
  if (id == "as-tetra-8") return tau2_named(E8Position::eisenstein, "E8 Eisenstein roots through tau2");
  if (id == "as-tetra-11") return tau2_named(E8Position::gaussian, "E8 Gaussian roots through tau2");
  if (id == "rains-delta3-8") return rains_delta3();
  if (id == "stroud-delta5-16") return stroud_delta5();
  if (id == "bw-delta7-51") return bw_delta7();
  if (id == "rains-delta7-50") return rains_delta7();
  if (id == "leech-delta11-276") return leech_delta11();
  if (id == "triangle-pb3") return triangle_pb3();
  if (id == "exp2-pb4") return exp2_pb4();
  for (const auto& e : catalog_entries())
    if (e.id == id) throw std::invalid_argument("catalog entry " + id + " is unavailable: " + e.description);
  throw std::invalid_argument("unknown catalog id: " + id);
}

}  // namespace cub
