#include "cubature/formula.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cub {

ExactScalar Formula::total_weight() const {
  ExactScalar s(0);
  for (const auto& w : weights) s += w;
  return s;
}

long Formula::field() const {
  std::vector<const ExactScalar*> xs;
  for (const auto& p : points)
    for (const auto& x : p) xs.push_back(&x);
  for (const auto& w : weights) xs.push_back(&w);
  if (norm2) xs.push_back(&*norm2);
  return common_field(xs);
}

void Formula::validate() const {
  if (points.size() != weights.size()) throw std::invalid_argument("point and weight counts differ");
  const std::size_t cc = static_cast<std::size_t>(space.coord_count());
  for (const auto& p : points)
    if (p.size() != cc) throw std::invalid_argument("point dimension does not match " + space.name());
  if (norm2 && space.kind != SpaceKind::sphere) throw std::invalid_argument("norm2 is only meaningful on spheres");
}

ScalarVec Formula::normalized_point(std::size_t i) const {
  if (!norm2) return points[i];
  ExactScalar r;
  try {
    r = sqrt_scalar(*norm2);
    ScalarVec out;
    for (const auto& x : points[i]) out.push_back(x / r);
    return out;
  } catch (const std::domain_error&) {
    BigFloat rb = sqrt(norm2->to_bigfloat());
    ScalarVec out;
    for (const auto& x : points[i]) out.push_back(ExactScalar::bigfloat(x.to_bigfloat() / rb));
    return out;
  }
}

std::string exact_key(const ScalarVec& v) {
  std::string k;
  for (const auto& x : v) {
    if (x.is_exact()) {
      k += x.str();
    } else {
      // bigfloats are keyed a few digits short of their precision
      std::ostringstream os;
      unsigned digits = static_cast<unsigned>(x.precision() * 0.30103) - 6;
      os.precision(std::max(10u, digits));
      BigFloat b = x.to_bigfloat();
      if (abs(b) < BigFloat(1e-60)) b = 0;
      os << std::scientific << b;
      k += os.str();
    }
    k += ';';
  }
  return k;
}

Formula merge_duplicates(const Formula& f) {
  f.validate();
  std::map<std::string, std::size_t> index;
  Formula g = f;
  g.points.clear();
  g.weights.clear();
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string k = exact_key(f.points[i]);
    auto it = index.find(k);
    if (it == index.end()) {
      index.emplace(k, g.points.size());
      g.points.push_back(f.points[i]);
      g.weights.push_back(f.weights[i]);
    } else {
      g.weights[it->second] += f.weights[i];
    }
  }
  Formula h = g;
  h.points.clear();
  h.weights.clear();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.weights[i].is_zero()) continue;
    h.points.push_back(g.points[i]);
    h.weights.push_back(g.weights[i]);
  }
  return h;
}

SignedPerm SignedPerm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  SignedPerm g;
  g.perm.resize(n);
  g.sign.assign(n, 1);
  for (int i = 0; i < n; ++i) g.perm[i] = i;
  // the value at position c[i] moves to c[i+1]
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) g.perm[c[(i + 1) % c.size()] - 1] = c[i] - 1;
  return g;
}

ScalarVec SignedPerm::apply(const ScalarVec& x) const {
  ScalarVec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign[i] < 0 ? -x[perm[i]] : x[perm[i]];
  return y;
}

Formula orbit_symmetrize(const SpaceDescriptor& space, const std::vector<ScalarVec>& seeds,
                         const ScalarVec& seed_weights, const std::vector<SignedPerm>& gens, std::size_t cap) {
  if (seeds.size() != seed_weights.size()) throw std::invalid_argument("seed and weight counts differ");
  for (const auto& g : gens)
    if (g.perm.size() != static_cast<std::size_t>(space.coord_count()))
      throw std::invalid_argument("generator size does not match the space");
  Formula f;
  f.space = space;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    std::unordered_set<std::string> seen;
    std::deque<ScalarVec> queue{seeds[s]};
    seen.insert(exact_key(seeds[s]));
    while (!queue.empty()) {
      ScalarVec p = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        ScalarVec q = g.apply(p);
        if (seen.insert(exact_key(q)).second) {
          if (seen.size() > cap) throw std::runtime_error("orbit exceeds cap " + std::to_string(cap));
          queue.push_back(q);
        }
      }
      f.points.push_back(std::move(p));
      f.weights.push_back(seed_weights[s]);
    }
  }
  ExactScalar tot = f.total_weight();
  if (tot.is_exact() && tot != ExactScalar(1))
    throw std::runtime_error("orbit weights sum to " + tot.str() + ", not 1");
  return f;
}

std::string Classification::label() const {
  if (exterior) return negative ? "negative-exterior" : "exterior";
  if (negative) return "negative";
  std::string s = equal_weight ? "E" : (positive ? "P" : "?");
  if (interior) s += "I";
  else if (boundary) s += "B";
  return s;
}

namespace {

// -1 outside, 0 on the boundary, 1 inside.
int locate(const SpaceDescriptor& sp, const ScalarVec& p, const std::optional<ExactScalar>& norm2) {
  auto worst = [](int acc, int v) { return std::min(acc, v); };
  switch (sp.kind) {
    case SpaceKind::simplex: {
      int r = 1;
      ExactScalar sum(0);
      for (const auto& x : p) {
        sum += x;
        r = worst(r, x.sign() > 0 ? 1 : (x.sign() == 0 ? 0 : -1));
      }
      if (sum.is_exact() ? sum != ExactScalar(1) : abs(sum.to_bigfloat() - 1) > BigFloat(1e-30)) return -1;
      return r;
    }
    case SpaceKind::corner_simplex:
    case SpaceKind::exponential_orthant: {
      int r = 1;
      ExactScalar sum(0);
      for (const auto& x : p) {
        sum += x;
        r = worst(r, x.sign() > 0 ? 1 : (x.sign() == 0 ? 0 : -1));
      }
      if (sp.kind == SpaceKind::corner_simplex) {
        int s = (ExactScalar(1) - sum).sign();
        r = worst(r, s > 0 ? 1 : (s == 0 ? 0 : -1));
      }
      return r;
    }
    case SpaceKind::ball: {
      ExactScalar r2(0);
      for (const auto& x : p) r2 += x * x;
      int s = (ExactScalar(1) - r2).sign();
      return s > 0 ? 1 : (s == 0 ? 0 : -1);
    }
    case SpaceKind::sphere: {
      ExactScalar r2(0);
      for (const auto& x : p) r2 += x * x;
      ExactScalar target = norm2 ? *norm2 : ExactScalar(1);
      ExactScalar diff = r2 - target;
      if (diff.is_exact()) return diff.is_zero() ? 1 : -1;
      return abs(diff.to_bigfloat()) < BigFloat(1e-30) ? 1 : -1;
    }
    case SpaceKind::jacobi_interval:
    case SpaceKind::moment_interval: {
      ExactScalar lo(sp.lo), hi(sp.hi);
      int a = (p[0] - lo).sign(), b = (hi - p[0]).sign();
      if (a < 0 || b < 0) return -1;
      return (a == 0 || b == 0) ? 0 : 1;
    }
    case SpaceKind::trig_torus:
    case SpaceKind::gaussian: return 1;
  }
  return 1;
}

}  // namespace

Classification classify(const Formula& f) {
  f.validate();
  Classification c;
  c.positive = true;
  c.equal_weight = true;
  for (const auto& w : f.weights) {
    if (w.sign() <= 0) c.positive = false;
    if (w.sign() < 0) c.negative = true;
    if (!(w == f.weights.front())) c.equal_weight = false;
  }
  if (!c.positive) c.equal_weight = false;
  int lowest = 1;
  for (const auto& p : f.points) lowest = std::min(lowest, locate(f.space, p, f.norm2));
  c.exterior = lowest < 0;
  c.boundary = lowest == 0;
  c.interior = lowest == 1;
  return c;
}

CpDesignResult cp_design_check(const std::vector<ScalarVec>& lines, int t, double tol) {
  CpDesignResult r;
  r.lines = lines.size();
  if (lines.empty()) throw std::invalid_argument("no lines");
  const std::size_t m = lines.front().size();
  if (m % 2) throw std::invalid_argument("line vectors need an even real length");
  const int n = static_cast<int>(m / 2);
  r.complex_dim = n;
  bool exact = true;
  for (const auto& l : lines) {
    if (l.size() != m) throw std::invalid_argument("lines have different lengths");
    ExactScalar nn(0);
    for (const auto& x : l) {
      nn += x * x;
      if (!x.is_exact()) exact = false;
    }
    ExactScalar dev = nn - ExactScalar(1);
    bool unit = dev.is_exact() ? dev.is_zero() : abs(dev.to_bigfloat()) < BigFloat(tol);
    if (!unit) throw std::invalid_argument("cp_design_check: non-unit input vector");
  }
  Rat target = frac(1, binomial(n + t - 1, t));
  r.target = target.get_str();
  ExactScalar acc(0);
  for (const auto& x : lines)
    for (const auto& y : lines) {
      ExactScalar re(0), im(0);
      for (int k = 0; k < n; ++k) {
        const auto &xr = x[2 * k], &xi = x[2 * k + 1], &yr = y[2 * k], &yi = y[2 * k + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
      }
      acc += pow(re * re + im * im, static_cast<unsigned>(t));
    }
  ExactScalar avg = acc / ExactScalar(Rat(static_cast<long>(lines.size() * lines.size())));
  ExactScalar diff = avg - ExactScalar(target);
  if (exact && diff.is_exact()) {
    r.average = avg.str();
    r.pass = diff.is_zero();
    r.deviation = r.pass ? 0.0 : std::fabs(diff.to_double());
  } else {
    r.average = avg.str();
    r.deviation = std::fabs(diff.to_double());
    r.pass = r.deviation <= tol;
  }
  return r;
}

}  // namespace cub
