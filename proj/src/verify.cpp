#include "cubature/formula.hpp"
#include "cubature/verify_kernel.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cub {

namespace kernel {
long& qfield() {
  static long d = 0;
  return d;
}
}  // namespace kernel

namespace {

using kernel::QElem;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

std::string value_key(const ExactScalar& x, bool exact) {
  if (exact) return x.str();
  long double v = x.to_ld();
  long long q = std::llround(v * 1099511627776.0L);  // 2^40 grid
  return "f" + std::to_string(q);
}

struct IdTable {
  std::unordered_map<std::string, int> ids;
  int get(const std::string& k) {
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(ids.size());
    ids.emplace(k, id);
    return id;
  }
};

}  // namespace

SymmetryInfo certify_symmetries(const Formula& f) {
  SymmetryInfo info;
  const int dim = f.space.coord_count();
  const std::size_t n = f.size();
  if (n == 0) return info;
  bool exact = true;
  try {
    exact = f.field() >= 0;
  } catch (const std::domain_error&) {
    exact = false;
  }
  IdTable table;
  std::vector<std::vector<int>> pts(n, std::vector<int>(dim + 1));
  std::vector<std::vector<int>> neg(n, std::vector<int>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < dim; ++c) {
      pts[i][c] = table.get(value_key(f.points[i][c], exact));
      neg[i][c] = table.get(value_key(-f.points[i][c], exact));
    }
    pts[i][dim] = table.get("w" + value_key(f.weights[i], exact));
  }
  std::unordered_map<std::vector<int>, int, VecHash> count;
  for (const auto& p : pts) ++count[p];
  std::vector<std::size_t> reps;  // one index per distinct key
  {
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (seen.emplace(pts[i], 1).second) reps.push_back(i);
  }
  auto invariant = [&](const std::function<void(std::size_t, std::vector<int>&)>& map) {
    std::vector<int> q(dim + 1);
    for (std::size_t i : reps) {
      map(i, q);
      q[dim] = pts[i][dim];
      auto it = count.find(q);
      if (it == count.end() || it->second != count[pts[i]]) return false;
    }
    return true;
  };
  bool all_sign = true;
  for (int c = 0; c < dim; ++c) all_sign = all_sign && f.space.sign_symmetric(c);
  if (all_sign) {
    info.central = invariant([&](std::size_t i, std::vector<int>& q) {
      for (int c = 0; c < dim; ++c) q[c] = neg[i][c];
    });
  }
  for (int c = 0; c < dim; ++c) {
    if (!f.space.sign_symmetric(c)) continue;
    bool ok = invariant([&](std::size_t i, std::vector<int>& q) {
      for (int k = 0; k < dim; ++k) q[k] = pts[i][k];
      q[c] = neg[i][c];
    });
    if (ok) info.flips.push_back(c);
  }
  if (f.space.permutation_symmetric()) {
    std::vector<int> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b) {
        if (find(a) == find(b)) continue;  // already implied by earlier transpositions
        bool ok = invariant([&](std::size_t i, std::vector<int>& q) {
          for (int k = 0; k < dim; ++k) q[k] = pts[i][k];
          std::swap(q[a], q[b]);
        });
        if (ok) parent[find(b)] = find(a);
      }
    std::map<int, std::vector<int>> comps;
    for (int c = 0; c < dim; ++c) comps[find(c)].push_back(c);
    for (auto& [r, members] : comps)
      if (members.size() > 1) info.components.push_back(members);
  }
  return info;
}

namespace {

template <class T>
T rat_to(const Rat& r);
template <>
Rat rat_to<Rat>(const Rat& r) {
  return r;
}
template <>
QElem rat_to<QElem>(const Rat& r) {
  return {r, Rat(0)};
}
template <>
double rat_to<double>(const Rat& r) {
  return r.get_d();
}
template <>
long double rat_to<long double>(const Rat& r) {
  return ExactScalar(r).to_ld();
}
template <>
BigFloat rat_to<BigFloat>(const Rat& r) {
  return ExactScalar(r).to_bigfloat();
}

template <class T>
T scalar_to(const ExactScalar& x);
template <>
Rat scalar_to<Rat>(const ExactScalar& x) {
  return x.rational();
}
template <>
QElem scalar_to<QElem>(const ExactScalar& x) {
  return {x.rational_part(), x.irrational_part()};
}
template <>
double scalar_to<double>(const ExactScalar& x) {
  return x.to_double();
}
template <>
long double scalar_to<long double>(const ExactScalar& x) {
  return x.to_ld();
}
template <>
BigFloat scalar_to<BigFloat>(const ExactScalar& x) {
  return x.to_bigfloat();
}

double magnitude(const Rat& r) { return std::fabs(r.get_d()); }
double magnitude(const QElem& q) { return std::fabs(ExactScalar::quadratic(q.a, q.b, kernel::qfield()).to_double()); }
double magnitude(double x) { return std::fabs(x); }
double magnitude(long double x) { return static_cast<double>(fabsl(x)); }
double magnitude(const BigFloat& x) { return static_cast<double>(abs(x)); }

bool exactly_zero(const Rat& r) { return r == 0; }
bool exactly_zero(const QElem& q) { return kernel::is_zero(q); }

std::string text(const Rat& r) { return r.get_str(); }
std::string text(const QElem& q) { return ExactScalar::quadratic(q.a, q.b, kernel::qfield()).str(); }

kernel::PruneSpec prune_spec(const SymmetryInfo& s, int dim) {
  kernel::PruneSpec ps;
  ps.flip.assign(dim, 0);
  for (int c : s.flips) ps.flip[c] = 1;
  ps.central = s.central;
  for (const auto& comp : s.components)
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) ps.pairs.emplace_back(comp[i], comp[i + 1]);
  return ps;
}

void record(VerificationReport& rep, const ExponentVector& a, double mag, bool zero, std::string value) {
  int d = monomial_degree(a);
  if (mag > rep.worst || rep.worst_alpha.empty()) {
    if (mag >= rep.worst) {
      rep.worst = mag;
      rep.worst_alpha = a;
    }
  }
  if (rep.failures.size() < VerificationReport::kMaxListedFailures)
    rep.failures.push_back({a, mag, zero, std::move(value)});
  if (rep.lowest_failing_degree < 0 || d < rep.lowest_failing_degree) rep.lowest_failing_degree = d;
}

template <class T>
void run_exact(const Formula& f, int t, const kernel::PruneSpec& ps, bool parallel, VerificationReport& rep) {
  const int dim = f.space.coord_count();
  const std::size_t n = f.size();
  std::vector<std::vector<T>> x(dim, std::vector<T>(n));
  std::vector<T> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < dim; ++c) x[c][i] = scalar_to<T>(f.points[i][c]);
    w[i] = scalar_to<T>(f.weights[i]);
  }
  std::vector<T> norm_pow(t / 2 + 1, kernel::one<T>());
  if (f.norm2) {
    T r = scalar_to<T>(*f.norm2);
    for (int k = 1; k <= t / 2; ++k) norm_pow[k] = norm_pow[k - 1] * r;
  }
  auto sums = kernel::tree_sums(x, w, t, ps, parallel);
  rep.evaluated_count = sums.size();
  for (auto& s : sums) {
    int d = monomial_degree(s.alpha);
    Rat m = moment(f.space, s.alpha);
    T expected = kernel::zero<T>();
    if (m != 0) expected = rat_to<T>(m) * norm_pow[d / 2];  // moments with odd total degree vanish
    T res = s.sum + rat_to<T>(Rat(-1)) * expected;
    if (!exactly_zero(res)) record(rep, s.alpha, magnitude(res), false, text(res));
  }
  rep.pass = rep.lowest_failing_degree < 0;
}

template <class T>
void run_float(const Formula& f, int t, double tol, const kernel::PruneSpec& ps, bool parallel,
               VerificationReport& rep) {
  const int dim = f.space.coord_count();
  const std::size_t n = f.size();
  std::vector<std::vector<T>> x(dim, std::vector<T>(n));
  std::vector<T> w(n);
  using std::sqrt;
  T inv_r = T(1);
  if (f.norm2) inv_r = T(1) / sqrt(scalar_to<T>(*f.norm2));
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < dim; ++c) x[c][i] = scalar_to<T>(f.points[i][c]) * inv_r;
    w[i] = scalar_to<T>(f.weights[i]);
  }
  auto sums = kernel::tree_sums(x, w, t, ps, parallel);
  rep.evaluated_count = sums.size();
  for (auto& s : sums) {
    T res = s.sum - rat_to<T>(moment(f.space, s.alpha));
    double mag = magnitude(res);
    if (!(mag <= tol)) record(rep, s.alpha, mag, false, "");
    else if (mag > rep.worst) {
      rep.worst = mag;
      rep.worst_alpha = s.alpha;
    }
  }
  rep.pass = rep.lowest_failing_degree < 0;
}

// Characters k with norm <= t, up to the pairing k ~ -k.
void enumerate_characters(const SpaceDescriptor& sp, int t, std::vector<ExponentVector>& out, std::size_t& total) {
  const int m = sp.dim;
  ExponentVector k(m, 0);
  total = 0;
  bool root = sp.torus_norm == TorusNorm::an_root;
  std::function<void(int, int, int, int)> rec = [&](int pos, int used_pos, int used_neg, int prev) {
    if (pos == m) {
      int norm;
      if (root) {
        int last = -prev;
        int p = used_pos + std::max(last, 0), q = used_neg + std::max(-last, 0);
        if (p > t || q > t) return;
        norm = p;
      } else {
        norm = used_pos;
      }
      (void)norm;
      ++total;
      for (int v : k) {
        if (v > 0) {
          out.push_back(k);
          return;
        }
        if (v < 0) return;
      }
      out.push_back(k);  // k = 0
      return;
    }
    if (root) {
      for (int c = -t; c <= t; ++c) {
        int step = c - prev;
        int p = used_pos + std::max(step, 0), q = used_neg + std::max(-step, 0);
        if (p > t || q > t) continue;
        k[pos] = c;
        rec(pos + 1, p, q, c);
      }
    } else {
      int left = t - used_pos;
      for (int c = -left; c <= left; ++c) {
        k[pos] = c;
        rec(pos + 1, used_pos + std::abs(c), 0, 0);
      }
    }
    k[pos] = 0;
  };
  rec(0, 0, 0, 0);
}

VerificationReport verify_torus(const Formula& f, int t, const VerifyOptions& opt) {
  if (opt.mode == VerifyMode::exact)
    throw std::invalid_argument("exact mode is not available for torus characters; use float mode");
  VerificationReport rep;
  rep.degree = t;
  rep.mode = opt.mode;
  const int m = f.space.dim;
  const std::size_t n = f.size();
  std::vector<ExponentVector> chars;
  std::size_t total = 0;
  enumerate_characters(f.space, t, chars, total);
  rep.monomial_count = total;
  rep.evaluated_count = chars.size();
  std::vector<long double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = f.weights[i].to_ld();
  // rational turns are reduced exactly to a common denominator
  bool rational = true;
  Int den = 1;
  for (const auto& p : f.points)
    for (const auto& x : p) {
      if (!x.is_rational()) {
        rational = false;
        break;
      }
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
    }
  const long double two_pi = 6.283185307179586476925286766559005768L;
  std::vector<std::vector<long long>> num;
  std::vector<std::vector<long double>> ang;
  long long D = 0;
  if (rational && den < (Int(1) << 40)) {
    D = den.get_si();
    num.assign(n, std::vector<long long>(m));
    for (std::size_t i = 0; i < n; ++i)
      for (int c = 0; c < m; ++c) {
        Rat v = f.points[i][c].rational() * Rat(den);
        Int z = v.get_num() % den;
        if (z < 0) z += den;
        num[i][c] = z.get_si();
      }
  } else {
    ang.assign(n, std::vector<long double>(m));
    for (std::size_t i = 0; i < n; ++i)
      for (int c = 0; c < m; ++c) ang[i][c] = f.points[i][c].to_ld();
  }
  std::vector<long double> ctab, stab;
  if (D > 0 && D <= (1 << 22)) {
    ctab.resize(D);
    stab.resize(D);
    for (long long j = 0; j < D; ++j) {
      ctab[j] = cosl(two_pi * static_cast<long double>(j) / static_cast<long double>(D));
      stab[j] = sinl(two_pi * static_cast<long double>(j) / static_cast<long double>(D));
    }
  }
  std::vector<double> mags(chars.size());
#pragma omp parallel for schedule(dynamic, 64) if (opt.parallel)
  for (std::size_t ci = 0; ci < chars.size(); ++ci) {
    const auto& k = chars[ci];
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double c, s;
      if (D > 0) {
        __int128 ph = 0;
        for (int a = 0; a < m; ++a) ph += static_cast<__int128>(k[a]) * num[i][a];
        long long r = static_cast<long long>(ph % D);
        if (r < 0) r += D;
        if (!ctab.empty()) {
          c = ctab[r];
          s = stab[r];
        } else {
          long double th = two_pi * static_cast<long double>(r) / static_cast<long double>(D);
          c = cosl(th);
          s = sinl(th);
        }
      } else {
        long double th = 0;
        for (int a = 0; a < m; ++a) th += k[a] * ang[i][a];
        th -= floorl(th);
        c = cosl(two_pi * th);
        s = sinl(two_pi * th);
      }
      re += w[i] * c;
      im += w[i] * s;
    }
    re -= static_cast<long double>(trig_moment(k).get_d());
    mags[ci] = static_cast<double>(sqrtl(re * re + im * im));
  }
  for (std::size_t ci = 0; ci < chars.size(); ++ci) {
    ExponentVector a = chars[ci];
    if (!(mags[ci] <= opt.tol)) {
      record(rep, a, mags[ci], false, "");
      int d = f.space.torus_norm == TorusNorm::l1 ? l1_norm(a) : an_root_norm_from_root_coords(a);
      if (rep.lowest_failing_degree < 0 || d < rep.lowest_failing_degree) rep.lowest_failing_degree = d;
    } else if (mags[ci] > rep.worst) {
      rep.worst = mags[ci];
      rep.worst_alpha = a;
    }
  }
  // record() uses the monomial degree; recompute the minimum with the torus norm
  if (!rep.failures.empty()) {
    int lo = -1;
    for (std::size_t ci = 0; ci < chars.size(); ++ci)
      if (!(mags[ci] <= opt.tol)) {
        int d = f.space.torus_norm == TorusNorm::l1 ? l1_norm(chars[ci]) : an_root_norm_from_root_coords(chars[ci]);
        if (lo < 0 || d < lo) lo = d;
      }
    rep.lowest_failing_degree = lo;
  }
  rep.pass = rep.lowest_failing_degree < 0;
  return rep;
}

}  // namespace

VerificationReport verify(const Formula& f, int t, const VerifyOptions& opt) {
  f.validate();
  if (t < 0) throw std::invalid_argument("degree must be >= 0");
  if (f.space.is_torus()) return verify_torus(f, t, opt);
  VerificationReport rep;
  rep.degree = t;
  rep.mode = opt.mode;
  const int dim = f.space.coord_count();
  rep.monomial_count = binomial(dim + t, t).get_ui();
  long field = f.field();
  if (opt.mode == VerifyMode::exact && field < 0)
    throw std::invalid_argument("exact mode requires exact scalars; formula has bigfloat data");
  if (opt.prune) rep.symmetry = certify_symmetries(f);
  kernel::PruneSpec ps = prune_spec(rep.symmetry, dim);
  if (opt.mode == VerifyMode::exact) {
    if (field == 0) {
      run_exact<Rat>(f, t, ps, opt.parallel, rep);
    } else {
      kernel::qfield() = field;
      run_exact<QElem>(f, t, ps, opt.parallel, rep);
    }
  } else if (opt.eval_bits <= 53) {
    run_float<double>(f, t, opt.tol, ps, opt.parallel, rep);
  } else if (opt.eval_bits <= 64) {
    run_float<long double>(f, t, opt.tol, ps, opt.parallel, rep);
  } else {
    PrecisionGuard guard(opt.eval_bits);
    run_float<BigFloat>(f, t, opt.tol, ps, opt.parallel, rep);
  }
  return rep;
}

int max_degree(const Formula& f, int t_max, const VerifyOptions& opt) {
  VerificationReport r = verify(f, t_max, opt);
  if (r.pass) return t_max;
  return r.lowest_failing_degree - 1;
}

}  // namespace cub
