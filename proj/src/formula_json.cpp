#include "cubature/formula_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cub {

using nlohmann::json;

namespace {

ExactScalar scalar_from(const json& v) {
  if (v.is_string()) return ExactScalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return ExactScalar(v.get<long>());
  if (v.is_number()) return ExactScalar::from_double(v.get<double>());
  throw std::invalid_argument("scalar must be a string or number");
}

}  // namespace

std::string scalar_tag(const Formula& f) {
  long d = f.field();
  if (d < 0) return "float";
  if (d == 0) return "rational";
  return "quadratic:" + std::to_string(d);
}

json space_to_json(const SpaceDescriptor& s) {
  json j = {{"kind", kind_name(s.kind)}, {"dim", s.dim}};
  if (s.kind == SpaceKind::jacobi_interval) {
    j["a"] = s.a;
    j["b"] = s.b;
  }
  if (s.kind == SpaceKind::trig_torus) j["norm"] = s.torus_norm == TorusNorm::l1 ? "l1" : "an_root";
  if (s.kind == SpaceKind::moment_interval) {
    json m = json::array();
    for (const auto& r : *s.moments) m.push_back(r.get_str());
    j["moments"] = m;
    j["lo"] = s.lo.get_str();
    j["hi"] = s.hi.get_str();
  }
  return j;
}

SpaceDescriptor space_from_json(const json& j) {
  SpaceKind k = kind_from_name(j.at("kind").get<std::string>());
  int dim = j.value("dim", 1);
  if (dim < 1) throw std::invalid_argument("space dim must be >= 1");
  switch (k) {
    case SpaceKind::jacobi_interval: return SpaceDescriptor::jacobi(j.value("a", 0), j.value("b", 0));
    case SpaceKind::trig_torus: {
      std::string norm = j.value("norm", "l1");
      if (norm != "l1" && norm != "an_root") throw std::invalid_argument("unknown torus norm " + norm);
      return SpaceDescriptor::torus(dim, norm == "l1" ? TorusNorm::l1 : TorusNorm::an_root);
    }
    case SpaceKind::moment_interval: {
      std::vector<Rat> m;
      for (const auto& v : j.at("moments")) m.push_back(scalar_from(v).rational());
      return SpaceDescriptor::tabulated(m, scalar_from(j.at("lo")).rational(), scalar_from(j.at("hi")).rational());
    }
    default: return SpaceDescriptor::make(k, dim);
  }
}

json formula_to_json(const Formula& f) {
  f.validate();
  json j;
  j["space"] = space_to_json(f.space);
  j["scalar"] = scalar_tag(f);
  json pts = json::array();
  for (const auto& p : f.points) {
    json row = json::array();
    for (const auto& x : p) row.push_back(x.str());
    pts.push_back(row);
  }
  j["points"] = pts;
  json ws = json::array();
  for (const auto& w : f.weights) ws.push_back(w.str());
  j["weights"] = ws;
  if (f.claimed_degree) j["claimed_degree"] = *f.claimed_degree;
  j["provenance"] = f.provenance;
  if (f.norm2) j["norm2"] = f.norm2->str();
  return j;
}

Formula formula_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("formula JSON must be an object");
  Formula f;
  f.space = space_from_json(j.at("space"));
  for (const auto& row : j.at("points")) {
    ScalarVec p;
    for (const auto& v : row) p.push_back(scalar_from(v));
    f.points.push_back(std::move(p));
  }
  for (const auto& v : j.at("weights")) f.weights.push_back(scalar_from(v));
  if (j.contains("claimed_degree") && !j["claimed_degree"].is_null()) f.claimed_degree = j["claimed_degree"].get<int>();
  f.provenance = j.value("provenance", "");
  if (j.contains("norm2")) f.norm2 = scalar_from(j["norm2"]);
  f.validate();
  if (j.contains("scalar")) {
    std::string tag = j["scalar"].get<std::string>();
    std::string actual = scalar_tag(f);
    if (tag != actual) throw std::invalid_argument("scalar tag " + tag + " does not match data (" + actual + ")");
  }
  return f;
}

std::string dump_formula(const Formula& f) { return formula_to_json(f).dump(1); }

Formula parse_formula(const std::string& text) { return formula_from_json(json::parse(text)); }

Formula load_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_formula(ss.str());
}

void save_formula(const Formula& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_formula(f) << "\n";
}

}  // namespace cub
