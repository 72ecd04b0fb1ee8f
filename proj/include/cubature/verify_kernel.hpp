#pragma once

// Monomial-sum kernels. The OpenMP kernel walks the tree of monomials
// x_{i1} x_{i2} ... x_{ik} (i1 <= i2 <= ...) keeping one running product per
// point and level, so every monomial costs one multiply per point. The serial
// reference evaluates each monomial from scratch and is used to test the
// parallel kernel.

#include "cubature/monomials.hpp"
#include "cubature/scalar.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace cub::kernel {

// Element a + b*sqrt(qfield()) of the quadratic field fixed for one run.
struct QElem {
  Rat a, b;
};

long& qfield();

inline QElem operator+(const QElem& x, const QElem& y) { return {x.a + y.a, x.b + y.b}; }
inline QElem operator-(const QElem& x, const QElem& y) { return {x.a - y.a, x.b - y.b}; }
inline QElem operator*(const QElem& x, const QElem& y) {
  return {x.a * y.a + x.b * y.b * qfield(), x.a * y.b + x.b * y.a};
}
inline QElem& operator+=(QElem& x, const QElem& y) {
  x.a += y.a;
  x.b += y.b;
  return x;
}
inline bool is_zero(const QElem& x) { return x.a == 0 && x.b == 0; }

template <class T>
T one() {
  return T(1);
}
template <>
inline QElem one<QElem>() {
  return {Rat(1), Rat(0)};
}
template <class T>
T zero() {
  return T(0);
}
template <>
inline QElem zero<QElem>() {
  return {Rat(0), Rat(0)};
}

struct PruneSpec {
  std::vector<char> flip;                   // odd exponent here => sum is zero
  bool central = false;                     // odd total degree => sum is zero
  std::vector<std::pair<int, int>> pairs;   // canonical monomials have e[a] >= e[b]
};

template <class T>
struct MonomialSum {
  ExponentVector alpha;
  T sum;
};

template <class T>
class TreeWalker {
 public:
  TreeWalker(const std::vector<std::vector<T>>& x, const std::vector<T>& w, int t, const PruneSpec& ps)
      : x_(x), w_(w), t_(t), ps_(ps), dim_(static_cast<int>(x.size())), n_(w.size()), e_(dim_, 0) {
    level_.assign(t_ + 1, std::vector<T>(n_, zero<T>()));
    for (auto& v : level_[0]) v = one<T>();
  }

  void root() {
    if (evaluable()) emit(0);
  }

  // Handles the node x_v and everything below it.
  void branch(int v) { step(0, v); }

  std::vector<MonomialSum<T>>& results() { return out_; }

 private:
  bool subtree_dead(int v) const {
    for (int c = 0; c < v; ++c)
      if (!ps_.flip.empty() && ps_.flip[c] && (e_[c] & 1)) return true;
    for (auto [a, b] : ps_.pairs)
      if (a < v && e_[a] < e_[b]) return true;
    return false;
  }

  bool evaluable() const {
    if (!ps_.flip.empty())
      for (int c = 0; c < dim_; ++c)
        if (ps_.flip[c] && (e_[c] & 1)) return false;
    if (ps_.central && (deg_ & 1)) return false;
    for (auto [a, b] : ps_.pairs)
      if (e_[a] < e_[b]) return false;
    return true;
  }

  void emit(int d) {
    T s = zero<T>();
    const auto& p = level_[d];
    for (std::size_t i = 0; i < n_; ++i) s += w_[i] * p[i];
    out_.push_back({e_, std::move(s)});
  }

  void step(int d, int v) {
    ++e_[v];
    ++deg_;
    if (!subtree_dead(v)) {
      const auto& src = level_[d];
      auto& dst = level_[d + 1];
      const auto& xv = x_[v];
      for (std::size_t i = 0; i < n_; ++i) dst[i] = src[i] * xv[i];
      if (evaluable()) emit(d + 1);
      if (d + 1 < t_)
        for (int u = v; u < dim_; ++u) step(d + 1, u);
    }
    --e_[v];
    --deg_;
  }

  const std::vector<std::vector<T>>& x_;
  const std::vector<T>& w_;
  int t_;
  const PruneSpec& ps_;
  int dim_;
  std::size_t n_;
  ExponentVector e_;
  int deg_ = 0;
  std::vector<std::vector<T>> level_;
  std::vector<MonomialSum<T>> out_;
};

inline bool lex_less(const ExponentVector& a, const ExponentVector& b) { return a < b; }

// Parallel tree kernel. x is coordinate-major: x[c][i] is coordinate c of point i.
template <class T>
std::vector<MonomialSum<T>> tree_sums(const std::vector<std::vector<T>>& x, const std::vector<T>& w, int t,
                                      const PruneSpec& ps, bool parallel) {
  const int dim = static_cast<int>(x.size());
  std::vector<std::vector<MonomialSum<T>>> parts(dim + 1);
  {
    TreeWalker<T> root(x, w, t, ps);
    root.root();
    parts[dim] = std::move(root.results());
  }
  if (t > 0) {
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int v = 0; v < dim; ++v) {
      sync_thread_precision();
      TreeWalker<T> walker(x, w, t, ps);
      walker.branch(v);
      parts[v] = std::move(walker.results());
    }
  }
  std::vector<MonomialSum<T>> all;
  for (auto& p : parts)
    for (auto& m : p) all.push_back(std::move(m));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return lex_less(a.alpha, b.alpha); });
  return all;
}

// Serial reference: every monomial of degree <= t, no pruning.
template <class T>
std::vector<MonomialSum<T>> reference_sums(const std::vector<std::vector<T>>& x, const std::vector<T>& w, int t) {
  const int dim = static_cast<int>(x.size());
  std::vector<MonomialSum<T>> out;
  for (const auto& a : enumerate_monomials(dim, t)) {
    T s = zero<T>();
    for (std::size_t i = 0; i < w.size(); ++i) {
      T p = w[i];
      for (int c = 0; c < dim; ++c)
        for (int k = 0; k < a[c]; ++k) p = p * x[c][i];
      s += p;
    }
    out.push_back({a, std::move(s)});
  }
  return out;
}

}  // namespace cub::kernel
