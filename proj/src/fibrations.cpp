#include "cubature/fibrations.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cub {

FiberMap fiber_map(FiberKind kind, const SpaceDescriptor& source) {
  FiberMap m{kind, source, source};
  const int d = source.dim;
  switch (kind) {
    case FiberKind::moment_pi:
    case FiberKind::tau2:
      if (d % 2) throw std::invalid_argument("quadratic moment map needs an even real dimension");
      if (source.kind == SpaceKind::sphere) m.target = SpaceDescriptor::simplex(d / 2 - 1);
      else if (kind == FiberKind::tau2 && source.kind == SpaceKind::ball) m.target = SpaceDescriptor::corner_simplex(d / 2);
      else if (kind == FiberKind::tau2 && source.kind == SpaceKind::gaussian)
        m.target = SpaceDescriptor::exponential_orthant(d / 2);
      else throw std::invalid_argument("no moment map from " + source.name());
      break;
    case FiberKind::hopf:
      if (source.kind != SpaceKind::sphere || d % 2) throw std::invalid_argument("Hopf map needs an odd sphere in C^n");
      break;
    case FiberKind::tau1:
      if (source.kind != SpaceKind::sphere) throw std::invalid_argument("tau1 needs a sphere");
      m.target = SpaceDescriptor::simplex(d - 1);
      break;
    case FiberKind::height:
      if (source.kind != SpaceKind::sphere || d != 3) throw std::invalid_argument("height map needs sphere(3)");
      m.target = SpaceDescriptor::jacobi(0, 0);
      break;
  }
  return m;
}

Formula project_formula(const Formula& f, const FiberMap& map) {
  f.validate();
  if (!(f.space == map.source)) throw std::invalid_argument("formula lives on " + f.space.name() + ", map expects " + map.source.name());
  Formula g;
  g.space = map.target;
  g.weights = f.weights;
  const ExactScalar n2 = f.norm2 ? *f.norm2 : ExactScalar(1);
  for (const auto& p : f.points) {
    ScalarVec q;
    switch (map.kind) {
      case FiberKind::moment_pi:
      case FiberKind::tau2:
        for (std::size_t k = 0; k + 1 < p.size(); k += 2) q.push_back((p[k] * p[k] + p[k + 1] * p[k + 1]) / n2);
        break;
      case FiberKind::tau1:
        for (const auto& x : p) q.push_back(x * x / n2);
        break;
      case FiberKind::height: {
        ExactScalar r = n2 == ExactScalar(1) ? ExactScalar(1) : sqrt_scalar(n2);
        q.push_back(p[2] / r);
        break;
      }
      case FiberKind::hopf:
        q = p;
        break;
    }
    g.points.push_back(std::move(q));
  }
  if (map.kind == FiberKind::hopf) {
    ComplexVectorSet cs;
    cs.m = f.space.dim / 2;
    cs.vectors = f.points;
    cs.norm2 = n2;
    Formula h;
    h.space = f.space;
    auto cls = line_classes(cs, &h.points);
    h.weights.assign(h.points.size(), ExactScalar(0));
    for (std::size_t i = 0; i < cls.size(); ++i) h.weights[cls[i]] += f.weights[i];
    if (f.claimed_degree) h.claimed_degree = *f.claimed_degree / 2;
    h.provenance = "Hopf image of " + f.provenance;
    return h;
  }
  if (map.kind == FiberKind::height) g.claimed_degree = f.claimed_degree;
  else if (map.kind != FiberKind::tau1 && f.claimed_degree) g.claimed_degree = *f.claimed_degree / 2;
  g.provenance = "projection of " + f.provenance;
  return merge_duplicates(g);
}

namespace {

int base_coords(const Formula& base) {
  switch (base.space.kind) {
    case SpaceKind::simplex:
    case SpaceKind::corner_simplex:
    case SpaceKind::exponential_orthant: return base.space.coord_count();
    default: throw std::invalid_argument("twisted products need a simplex, corner simplex or orthant base, got " + base.space.name());
  }
}

SpaceDescriptor lift_target(const Formula& base) {
  const int n = base_coords(base);
  switch (base.space.kind) {
    case SpaceKind::simplex: return SpaceDescriptor::sphere(2 * n);
    case SpaceKind::corner_simplex: return SpaceDescriptor::ball(2 * n);
    default: return SpaceDescriptor::gaussian(2 * n);
  }
}

std::vector<int> nonzero_coords(const ScalarVec& p) {
  std::vector<int> s;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) s.push_back(static_cast<int>(k));
  return s;
}

const TorusDesign* design_for(const FiberDesigns& designs, int m, int s) {
  if (m == 0) return nullptr;
  auto it = designs.find(m);
  if (it == designs.end()) throw std::invalid_argument("missing fiber design for subtorus dimension " + std::to_string(m));
  if (it->second.formula.space.dim != m) throw std::invalid_argument("fiber design has the wrong dimension");
  if (it->second.degree < s)
    throw std::invalid_argument("fiber design on T^" + std::to_string(m) + " has degree " + std::to_string(it->second.degree) +
                                " < " + std::to_string(s));
  return &it->second;
}

// cos/sin of every design coordinate, flattened per point.
struct Phases {
  std::vector<BigFloat> c, s;
};

Phases phases(const TorusDesign& d, const std::vector<Rat>* shift) {
  Phases ph;
  const BigFloat two_pi = 2 * bf_pi();
  std::map<Rat, std::pair<BigFloat, BigFloat>> cache;
  for (const auto& p : d.formula.points)
    for (std::size_t j = 0; j < p.size(); ++j) {
      Rat turn = p[j].rational();
      if (shift) turn += (*shift)[j];
      auto it = cache.find(turn);
      if (it == cache.end()) {
        BigFloat a = two_pi * BigFloat(turn.get_num().get_str()) / BigFloat(turn.get_den().get_str());
        it = cache.emplace(turn, std::make_pair(BigFloat(cos(a)), BigFloat(sin(a)))).first;
      }
      ph.c.push_back(it->second.first);
      ph.s.push_back(it->second.second);
    }
  return ph;
}

}  // namespace

FiberProfile fiber_profile(const Formula& base) {
  FiberProfile fp;
  for (const auto& p : base.points) {
    std::vector<int> z;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k].is_zero()) z.push_back(static_cast<int>(k));
    fp.generic.push_back(z.empty());
    fp.zero_coords.push_back(std::move(z));
  }
  return fp;
}

std::vector<int> needed_subtorus_dims(const Formula& base) {
  std::set<int> ms;
  for (const auto& p : base.points) {
    int m = static_cast<int>(nonzero_coords(p).size());
    if (m > 0) ms.insert(m);
  }
  return {ms.begin(), ms.end()};
}

FiberDesigns default_fiber_designs(const Formula& base, int s) {
  FiberDesigns d;
  for (int m : needed_subtorus_dims(base)) d.emplace(m, default_fiber_design(m, s));
  return d;
}

std::size_t twisted_product_count(const Formula& base, const FiberDesigns& designs) {
  base_coords(base);
  std::size_t total = 0;
  for (const auto& p : base.points) {
    int m = static_cast<int>(nonzero_coords(p).size());
    if (m == 0) {
      ++total;
      continue;
    }
    auto it = designs.find(m);
    if (it == designs.end()) throw std::invalid_argument("missing fiber design for subtorus dimension " + std::to_string(m));
    total += it->second.size();
  }
  return total;
}

Formula twisted_product(const Formula& base, const FiberDesigns& designs, int s, const TwistOptions& opt) {
  base.validate();
  const int n = base_coords(base);
  if (classify(base).exterior) throw std::invalid_argument("base formula has points outside its domain");
  if (base.space.kind == SpaceKind::simplex)
    for (const auto& p : base.points)
      if (nonzero_coords(p).empty()) throw std::invalid_argument("simplex base point with no nonzero coordinate");

  const std::size_t nb = base.size();
  std::vector<std::vector<int>> supp(nb);
  std::vector<const TorusDesign*> des(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    supp[i] = nonzero_coords(base.points[i]);
    des[i] = design_for(designs, static_cast<int>(supp[i].size()), s);
  }
  std::map<int, Phases> shared;
  if (!opt.rotation)
    for (const auto& [m, d] : designs) shared.emplace(m, phases(d, nullptr));

  std::vector<std::vector<ScalarVec>> pts(nb);
  std::vector<ScalarVec> wts(nb);
  const unsigned bits = working_precision();
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (std::size_t i = 0; i < nb; ++i) {
    sync_thread_precision();
    const auto& y = base.points[i];
    const auto& S = supp[i];
    if (!des[i]) {
      pts[i].push_back(ScalarVec(2 * n, ExactScalar(0)));
      wts[i].push_back(base.weights[i]);
      continue;
    }
    const TorusDesign& d = *des[i];
    const int m = static_cast<int>(S.size());
    Phases own;
    const Phases* ph;
    if (opt.rotation) {
      std::vector<Rat> r = opt.rotation(i, m);
      own = phases(d, &r);
      ph = &own;
    } else {
      ph = &shared.at(m);
    }
    std::vector<BigFloat> root;
    for (int k : S) root.push_back(sqrt(y[k].to_bigfloat()));
    ExactScalar w = base.weights[i] / ExactScalar(Rat(static_cast<long>(d.size())));
    for (std::size_t a = 0; a < d.size(); ++a) {
      ScalarVec q(2 * n, ExactScalar(0));
      for (int j = 0; j < m; ++j) {
        q[2 * S[j]] = ExactScalar::bigfloat(root[j] * ph->c[a * m + j], bits);
        q[2 * S[j] + 1] = ExactScalar::bigfloat(root[j] * ph->s[a * m + j], bits);
      }
      pts[i].push_back(std::move(q));
      wts[i].push_back(w);
    }
  }
  Formula f;
  f.space = lift_target(base);
  for (std::size_t i = 0; i < nb; ++i) {
    for (auto& q : pts[i]) f.points.push_back(std::move(q));
    for (auto& w : wts[i]) f.weights.push_back(std::move(w));
  }
  f.claimed_degree = s;
  f.provenance = "twisted product over " + base.provenance;
  return f;
}

namespace {

// exp(2 pi i j / N) exactly when N divides 8 or 12
std::optional<std::pair<ExactScalar, ExactScalar>> exact_root_of_unity(int j, int N) {
  if (8 % N != 0 && 12 % N != 0) return std::nullopt;
  const int L = 8 % N == 0 ? 8 : 12;
  const int k = (j * (L / N)) % L;
  if (L == 8) {
    const ExactScalar h = ExactScalar::quadratic(Rat(0), frac(1, 2), 2);
    static const int cs[8][2] = {{1, 0}, {2, 2}, {0, 1}, {-2, 2}, {-1, 0}, {-2, -2}, {0, -1}, {2, -2}};
    auto val = [&](int v) { return v == 2 ? h : (v == -2 ? -h : ExactScalar(v)); };
    return std::make_pair(val(cs[k][0]), val(cs[k][1]));
  }
  const ExactScalar r3 = ExactScalar::quadratic(Rat(0), frac(1, 2), 3);
  const ExactScalar half(frac(1, 2));
  // angles 30k degrees
  const ExactScalar c[12] = {1, r3, half, 0, -half, -r3, -1, -r3, -half, 0, half, r3};
  return std::make_pair(c[k], c[(k + 9) % 12]);
}

}  // namespace

Formula hopf_lift(const ComplexVectorSet& lines, int t) {
  if (t < 0) throw std::invalid_argument("negative degree");
  if (lines.vectors.empty()) throw std::invalid_argument("no lines to lift");
  const int N = 2 * t + 2;
  Formula f;
  f.space = SpaceDescriptor::sphere(2 * lines.m);
  const ExactScalar w(frac(1, static_cast<long>(N) * static_cast<long>(lines.size())));
  auto build = [&](bool exact) {
    f.points.clear();
    f.weights.clear();
    const BigFloat two_pi = 2 * bf_pi();
    for (const auto& v : lines.vectors)
      for (int j = 0; j < N; ++j) {
        ExactScalar c, s;
        auto ex = exact ? exact_root_of_unity(j, N) : std::nullopt;
        if (ex) {
          c = ex->first;
          s = ex->second;
        } else {
          BigFloat a = two_pi * j / N;
          c = ExactScalar::bigfloat(cos(a));
          s = ExactScalar::bigfloat(sin(a));
        }
        ScalarVec q;
        for (int k = 0; k < lines.m; ++k) {
          const ExactScalar &re = v[2 * k], &im = v[2 * k + 1];
          q.push_back(re * c - im * s);
          q.push_back(re * s + im * c);
        }
        f.points.push_back(std::move(q));
        f.weights.push_back(w);
      }
  };
  try {
    build(true);
    f.field();
  } catch (const std::domain_error&) {
    build(false);
  }
  if (!(lines.norm2 == ExactScalar(1))) f.norm2 = lines.norm2;
  f.claimed_degree = 2 * t + 1;
  f.provenance = "Hopf lift of " + lines.name;
  return f;
}

}  // namespace cub
