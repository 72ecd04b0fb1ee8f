// cubtool: construct, verify and bound cubature formulas.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 usage or input error.

#include "cubature/bounds.hpp"
#include "cubature/catalog.hpp"
#include "cubature/complex_sets.hpp"
#include "cubature/fibrations.hpp"
#include "cubature/formula_json.hpp"
#include "cubature/lattice.hpp"
#include "cubature/pipelines.hpp"
#include "cubature/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input, output, catalog_id;
  std::string mode = "exact";
  double tol = 1e-10;
  unsigned precision = 64;
  std::uint64_t seed = 0;
  std::size_t cap = 50000000;
};

void validate_paths(const RunConfig& c) {
  if (!c.input.empty() && !fs::is_regular_file(c.input)) throw UsageError("no such file: " + c.input);
  if (!c.output.empty()) {
    fs::path dir = fs::path(c.output).parent_path();
    if (!dir.empty() && !fs::is_directory(dir)) throw UsageError("output directory does not exist: " + dir.string());
  }
}

cub::VerifyOptions verify_options(const RunConfig& c) {
  cub::VerifyOptions o;
  if (c.mode == "exact") {
    o.mode = cub::VerifyMode::exact;
  } else if (c.mode == "float") {
    o.mode = cub::VerifyMode::floating;
    if (c.precision < 24) throw UsageError("--precision must be at least 24 bits");
    if (c.tol < std::ldexp(1.0, -static_cast<int>(c.precision) + 16))
      throw UsageError("--tol is below 2^-(precision-16)");
  } else {
    throw UsageError("--mode must be exact or float");
  }
  o.tol = c.tol;
  o.eval_bits = c.precision;
  return o;
}

cub::Formula input_formula(const RunConfig& c) {
  if (!c.catalog_id.empty()) {
    try {
      return cub::named_formula(c.catalog_id);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (c.input.empty()) throw UsageError("give --formula or --catalog");
  try {
    return cub::load_formula(c.input);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse ") + c.input + ": " + e.what());
  }
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text << "\n";
}

json alpha_json(const cub::ExponentVector& a) { return json(std::vector<int>(a.begin(), a.end())); }

json report_json(const cub::VerificationReport& r, const cub::Formula& f) {
  json j;
  j["space"] = f.space.name();
  j["points"] = f.size();
  j["degree"] = r.degree;
  j["mode"] = r.mode == cub::VerifyMode::exact ? "exact" : "float";
  j["pass"] = r.pass;
  j["worst"] = r.worst;
  j["worst_alpha"] = alpha_json(r.worst_alpha);
  j["monomials"] = r.monomial_count;
  j["evaluated"] = r.evaluated_count;
  if (r.lowest_failing_degree >= 0) j["lowest_failing_degree"] = r.lowest_failing_degree;
  json fails = json::array();
  for (const auto& x : r.failures) {
    json e{{"alpha", alpha_json(x.alpha)}, {"magnitude", x.magnitude}};
    if (!x.value.empty()) e["residual"] = x.value;
    fails.push_back(e);
  }
  j["failures"] = fails;
  j["class"] = cub::classify(f).label();
  return j;
}

json bound_json(const cub::BoundReport& b) {
  json j{{"name", b.name}, {"space", b.space}, {"degree", b.degree}, {"value", b.value.get_str()}};
  if (b.formula_size) {
    j["formula_size"] = *b.formula_size;
    j["satisfied"] = b.satisfied();
  }
  if (b.slack) j["slack"] = *b.slack;
  if (b.asymptotic) j["asymptotic"] = *b.asymptotic;
  if (b.lattice_count) j["lattice_count"] = b.lattice_count->get_str();
  return j;
}

std::string bf_str(const cub::BigFloat& x) {
  std::ostringstream os;
  os.precision(20);
  os << x;
  return os.str();
}

cub::SpaceDescriptor space_by_name(const std::string& name, int dim) {
  using cub::SpaceDescriptor;
  if (dim < 1) throw UsageError("--dim must be positive");
  if (name == "simplex") return SpaceDescriptor::simplex(dim);
  if (name == "corner_simplex") return SpaceDescriptor::corner_simplex(dim);
  if (name == "sphere") return SpaceDescriptor::sphere(dim + 1);  // S^dim
  if (name == "ball") return SpaceDescriptor::ball(dim);
  if (name == "gaussian") return SpaceDescriptor::gaussian(dim);
  if (name == "exponential_orthant") return SpaceDescriptor::exponential_orthant(dim);
  if (name == "torus") return SpaceDescriptor::torus(dim);
  if (name == "an_torus") return SpaceDescriptor::torus(dim, cub::TorusNorm::an_root);
  if (name == "interval") return SpaceDescriptor::jacobi(0, 0);
  throw UsageError("unknown space: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and bound cubature formulas"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
  };
  auto verify_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", cfg.tol, "Float tolerance");
    sub->add_option("--precision", cfg.precision, "Float evaluation bits (53, 64 or MPFR width)");
  };

  // verify
  int degree = -1;
  int max_search = -1;
  auto* verify = app.add_subcommand("verify", "Check exactness of a formula");
  verify->add_option("--formula", cfg.input, "Formula JSON file");
  verify->add_option("--catalog", cfg.catalog_id, "Catalog id instead of a file");
  verify->add_option("--degree", degree, "Degree to check")->required();
  verify->add_option("--max", max_search, "Also report the largest passing degree up to this bound");
  verify_flags(verify);
  common(verify);

  // construct
  std::string kind;
  int s = 1, n = 4, d = 3, t = 1, q = 3, lift = -1;
  long p = 0;
  bool an = false, boost_even = false;
  auto* construct = app.add_subcommand("construct", "Build a formula");
  construct
      ->add_option("kind", kind,
                   "sphere7 | s3 | ball4-7pt | gauss4-7pt | torus-craig | noskov | hex | hadamard-simplex | mub")
      ->required()
      ->check(CLI::IsMember({"sphere7", "s3", "ball4-7pt", "gauss4-7pt", "torus-craig", "noskov", "hex",
                             "hadamard-simplex", "mub"}));
  construct->add_option("--s", s, "Family parameter s");
  construct->add_option("--n", n, "Dimension parameter n");
  construct->add_option("--d", d, "Hexagonal parameter d");
  construct->add_option("--t", t, "Craig parameter t");
  construct->add_option("--p", p, "Craig prime (default: smallest admissible)");
  construct->add_option("--q", q, "MUB prime q");
  construct->add_option("--lift", lift, "Hopf-lift the MUB lines with 2t+2 phases");
  construct->add_flag("--an", an, "Craig lattice in A_n instead of the skew Z^n version");
  construct->add_flag("--even", boost_even, "Even-sum sublattice (Noskov: the d = 2s parity)");
  construct->add_option("--cap", cfg.cap, "Enumeration cap");
  common(construct);

  // catalog
  std::string emit_id;
  auto* catalog = app.add_subcommand("catalog", "Named formulas");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List catalog ids");
  auto* cat_emit = catalog->add_subcommand("emit", "Write a catalog formula as JSON");
  cat_emit->add_option("id", emit_id)->required();
  common(cat_list);
  common(cat_emit);

  // bounds
  std::string space_name;
  int dim = 0;
  auto* bounds = app.add_subcommand("bounds", "Lower bounds on the number of nodes");
  bounds->add_option("--space", space_name, "simplex, sphere (S^dim), ball, gaussian, torus, an_torus, cp");
  bounds->add_option("--dim", dim, "Dimension of the space");
  bounds->add_option("--degree", degree, "Degree")->required();
  bounds->add_option("--formula", cfg.input, "Compare against this formula");
  bounds->add_option("--catalog", cfg.catalog_id, "Compare against a catalog formula");
  bounds->add_option("--cap", cfg.cap, "Enumeration cap for the PSU torus bound");
  common(bounds);

  // check
  std::size_t samples = 100000;
  auto* check = app.add_subcommand("check", "Local optimality checks");
  check->require_subcommand(1);
  auto* sharp = check->add_subcommand("sharp", "Node occupancy and tail weights against Gauss");
  auto* epsnet = check->add_subcommand("epsnet", "Covering radius on the simplex");
  for (auto* sub : {sharp, epsnet}) {
    sub->add_option("--formula", cfg.input, "Formula JSON file");
    sub->add_option("--catalog", cfg.catalog_id, "Catalog id instead of a file");
    sub->add_option("--degree", degree, "Degree")->required();
    common(sub);
  }
  sharp->add_option("--tol", cfg.tol, "Comparison tolerance");
  epsnet->add_option("--samples", samples, "Number of samples");
  epsnet->add_option("--seed", cfg.seed, "Sample offset");

  // table
  bool heavy = false;
  auto* table = app.add_subcommand("table", "Reproduce the construction counts");
  table->add_flag("--heavy", heavy, "Also verify BW16 and the n=8 sphere lift");
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    validate_paths(cfg);

    if (*verify) {
      cub::VerifyOptions opt = verify_options(cfg);
      cub::Formula f = input_formula(cfg);
      if (degree < 0) throw UsageError("--degree must be nonnegative");
      auto r = cub::verify(f, degree, opt);
      json j = report_json(r, f);
      if (max_search >= 0) j["max_degree"] = cub::max_degree(f, max_search, opt);
      emit(cfg, j.dump(2));
      return r.pass ? 0 : 1;
    }

    if (*construct) {
      cub::Formula f;
      std::optional<cub::IntegerLattice> lattice;
      if (kind == "sphere7") {
        f = cub::sphere7_pipeline(n);
      } else if (kind == "s3") {
        f = cub::s3_family(s);
      } else if (kind == "ball4-7pt") {
        f = cub::ball4_pipeline();
      } else if (kind == "gauss4-7pt") {
        f = cub::gauss4_pipeline();
      } else if (kind == "torus-craig") {
        long prime = p ? p : cub::next_prime_above(std::max(2L * n, 2L * t));
        lattice = an ? cub::craig_lattice_An(n, t, prime) : cub::craig_lattice_Zn(n, t, prime, boost_even);
        f = cub::subgroup_points(*lattice, an ? t : 2 * t + 1).formula;
      } else if (kind == "noskov") {
        auto des = cub::noskov_design(s, boost_even);
        lattice = des.lattice;
        f = des.formula;
      } else if (kind == "hex") {
        auto des = cub::hex_design(d);
        lattice = des.lattice;
        f = des.formula;
      } else if (kind == "hadamard-simplex") {
        f = cub::hadamard_simplex_formula(n);
      } else {
        auto m = cub::mub_design(q);
        f = lift >= 0 ? cub::hopf_lift(m, lift) : cub::sphere_formula(m);
      }
      json j = cub::formula_to_json(f);
      if (lattice) j["lattice"] = cub::lattice_to_json(*lattice);
      emit(cfg, j.dump(2));
      return 0;
    }

    if (*catalog) {
      if (*cat_list) {
        json arr = json::array();
        for (const auto& e : cub::catalog_entries())
          arr.push_back({{"id", e.id}, {"space", e.space}, {"degree", e.degree},
                         {"available", e.available}, {"description", e.description}});
        emit(cfg, arr.dump(2));
        return 0;
      }
      cub::Formula f;
      try {
        f = cub::named_formula(emit_id);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      emit(cfg, cub::dump_formula(f));
      return 0;
    }

    if (*bounds) {
      json arr = json::array();
      bool ok = true;
      if (!cfg.input.empty() || !cfg.catalog_id.empty()) {
        cub::Formula f = input_formula(cfg);
        for (const auto& b : cub::applicable_bounds(f, degree)) {
          arr.push_back(bound_json(b));
          ok = ok && b.satisfied();
        }
      } else if (space_name == "cp") {
        if (degree % 2 == 0) throw UsageError("the CP^n bound needs an odd degree");
        arr.push_back({{"name", "cpn"}, {"dim", dim}, {"degree", degree},
                       {"value", cub::cpn_bound(dim, degree / 2).get_str()}});
      } else {
        if (space_name.empty()) throw UsageError("give --space and --dim, or a formula");
        cub::Formula empty;
        empty.space = space_by_name(space_name, dim);
        for (auto b : cub::applicable_bounds(empty, degree)) {
          b.formula_size.reset();
          b.slack.reset();
          arr.push_back(bound_json(b));
        }
      }
      emit(cfg, arr.dump(2));
      return ok ? 0 : 1;
    }

    if (*check) {
      cub::Formula f = input_formula(cfg);
      if (*sharp) {
        auto r = cub::sharp_check(f, degree, cfg.tol);
        json j{{"degree", r.degree}, {"gauss_points", r.k}, {"occupancy", r.occupancy}, {"tail", r.tail},
               {"left_equality", r.left_equality}, {"left_tail", bf_str(r.left_tail)},
               {"right_tail", bf_str(r.right_tail)}, {"violations", r.violations}, {"pass", r.pass()}};
        emit(cfg, j.dump(2));
        return r.pass() ? 0 : 1;
      }
      auto r = cub::epsnet_check(f, degree, samples, cfg.seed);
      json j{{"t", r.t}, {"epsilon", bf_str(r.epsilon)}, {"worst", r.worst}, {"samples", r.samples},
             {"covered", r.covered}};
      emit(cfg, j.dump(2));
      return r.covered ? 0 : 1;
    }

    if (*table) {
      cub::TableOptions opt;
      opt.heavy = heavy;
      json arr = json::array();
      bool ok = true;
      for (const auto& r : cub::reproduction_table(opt)) {
        json row{{"construction", r.construction}, {"anchor", r.anchor}, {"expected", r.expected},
                 {"achieved", r.achieved}, {"ok", r.ok}};
        if (r.degree) row["degree"] = *r.degree;
        if (r.degree_verified) row["degree_verified"] = *r.degree_verified;
        arr.push_back(row);
        ok = ok && r.ok;
      }
      emit(cfg, arr.dump(2));
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
