#include "cubature/orthopoly.hpp"

#include "cubature/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cub {

Rat OrthoPoly::operator()(const Rat& x) const {
  Rat s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
  return s;
}

BigFloat OrthoPoly::operator()(const BigFloat& x) const {
  BigFloat s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + ExactScalar(*it).to_bigfloat();
  return s;
}

namespace {

std::vector<Rat> poly_axpy(const std::vector<Rat>& p, const Rat& c0, const Rat& c1) {
  // (c1 x + c0) p
  std::vector<Rat> out(p.size() + 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += c0 * p[i];
    out[i + 1] += c1 * p[i];
  }
  return out;
}

}  // namespace

OrthoPoly jacobi_poly(int a, int b, int t) {
  if (a < 0 || b < 0) throw std::invalid_argument("jacobi_poly: parameters must be > -1");
  if (t < 0) throw std::invalid_argument("jacobi_poly: degree must be >= 0");
  OrthoPoly out;
  out.a = a;
  out.b = b;
  out.degree = t;
  std::vector<Rat> p0{Rat(1)};
  if (t == 0) {
    out.coeffs = p0;
    return out;
  }
  // P_1 = (a+1) + (a+b+2)(x-1)/2
  std::vector<Rat> p1{Rat(a + 1) - frac(a + b + 2, 2), frac(a + b + 2, 2)};
  for (int n = 2; n <= t; ++n) {
    long s = 2L * n + a + b;
    Rat c = Rat(2L * n * (n + a + b) * (s - 2));
    Rat lin = Rat((s - 1) * s * (s - 2));
    Rat con = Rat((s - 1) * (static_cast<long>(a) * a - static_cast<long>(b) * b));
    Rat back = Rat(2L * (n + a - 1) * (n + b - 1) * s);
    std::vector<Rat> next = poly_axpy(p1, con / c, lin / c);
    for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= back / c * p0[i];
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  out.coeffs = std::move(p1);
  return out;
}

Rat jacobi_inner(const OrthoPoly& p, const OrthoPoly& q) {
  if (p.a != q.a || p.b != q.b) throw std::invalid_argument("jacobi_inner: different weights");
  int deg = p.degree + q.degree;
  std::vector<Rat> m = jacobi_moments(p.a, p.b, deg);
  Rat s = 0;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) s += p.coeffs[i] * q.coeffs[j] * m[i + j];
  return s;
}

Recurrence jacobi_recurrence(int a, int b, int n) {
  Recurrence r;
  for (int k = 0; k < n; ++k) {
    long s = 2L * k + a + b;
    if (k == 0) {
      r.alpha.push_back(frac(b - a, a + b + 2));
      r.beta.push_back(Rat(1));
      continue;
    }
    r.alpha.push_back(frac(static_cast<long>(b) * b - static_cast<long>(a) * a, s * (s + 2)));
    Int num = Int(4) * k * (k + a) * (k + b) * (k + a + b);
    Int den = Int(s) * s * (s + 1) * (s - 1);
    r.beta.push_back(frac(num, den));
  }
  return r;
}

Recurrence recurrence_from_moments(const std::vector<Rat>& m, int n) {
  if (static_cast<int>(m.size()) < 2 * n) throw std::invalid_argument("need 2n moments for n recurrence terms");
  if (m[0] <= 0) throw std::invalid_argument("degenerate moment sequence: nonpositive mass");
  Recurrence r;
  std::vector<Rat> prev(2 * n, Rat(0)), cur(m.begin(), m.begin() + 2 * n);
  r.alpha.push_back(m[1] / m[0]);
  r.beta.push_back(m[0]);
  for (int k = 1; k < n; ++k) {
    std::vector<Rat> next(2 * n, Rat(0));
    for (int l = k; l < 2 * n - k; ++l) next[l] = cur[l + 1] - r.alpha[k - 1] * cur[l] - r.beta[k - 1] * prev[l];
    if (next[k] <= 0)
      throw std::invalid_argument("degenerate moment sequence: Hankel matrix singular at order " + std::to_string(k));
    r.alpha.push_back(next[k + 1] / next[k] - cur[k] / cur[k - 1]);
    r.beta.push_back(next[k] / cur[k - 1]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return r;
}

void eval_monic(const Recurrence& r, int t, const BigFloat& x, BigFloat& p, BigFloat& dp, BigFloat* prev) {
  if (t > r.size()) throw std::invalid_argument("recurrence too short");
  BigFloat pm(0), dpm(0);
  p = 1;
  dp = 0;
  for (int k = 0; k < t; ++k) {
    BigFloat al = ExactScalar(r.alpha[k]).to_bigfloat(), be = ExactScalar(r.beta[k]).to_bigfloat();
    if (k == 0) be = 0;
    BigFloat pn = (x - al) * p - be * pm;
    BigFloat dpn = p + (x - al) * dp - be * dpm;
    pm = p;
    dpm = dp;
    p = pn;
    dp = dpn;
  }
  if (prev) *prev = pm;
}

namespace {

long double eval_ld(const std::vector<long double>& al, const std::vector<long double>& be, int t, long double x) {
  long double pm = 0, p = 1;
  for (int k = 0; k < t; ++k) {
    long double pn = (x - al[k]) * p - (k ? be[k] : 0.0L) * pm;
    pm = p;
    p = pn;
    // keep the magnitude in range for large t
    long double m = fabsl(p) + fabsl(pm);
    if (m > 1e300L || (m < 1e-300L && m > 0)) {
      p /= m;
      pm /= m;
    }
  }
  return p;
}

}  // namespace

std::vector<BigFloat> recurrence_zeros(const Recurrence& r, int t, const Rat& lo, const Rat& hi, unsigned bits) {
  if (t < 1) throw std::invalid_argument("zeros need degree >= 1");
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  PrecisionGuard guard(bits + 32);
  std::vector<long double> al(t), be(t);
  for (int k = 0; k < t; ++k) {
    al[k] = ExactScalar(r.alpha[k]).to_ld();
    be[k] = ExactScalar(r.beta[k]).to_ld();
  }
  const long double mid = ExactScalar((lo + hi) / 2).to_ld(), half = ExactScalar((hi - lo) / 2).to_ld();
  const long double pi = 3.141592653589793238462643383279502884L;
  std::vector<std::pair<long double, long double>> brackets;
  for (long n = 64L * t + 64; n <= (1L << 22); n *= 4) {
    brackets.clear();
    long double xprev = mid + half, fprev = eval_ld(al, be, t, xprev);
    for (long j = 1; j <= n; ++j) {
      long double x = mid + half * cosl(pi * j / n);
      long double fx = eval_ld(al, be, t, x);
      if (fx == 0 || (fx < 0) != (fprev < 0)) {
        brackets.emplace_back(x, xprev);
        // step past an exact zero so it is not counted twice
        if (fx == 0 && j < n) {
          ++j;
          x = mid + half * cosl(pi * j / n);
          fx = eval_ld(al, be, t, x);
        }
      }
      xprev = x;
      fprev = fx;
    }
    if (static_cast<int>(brackets.size()) == t) break;
  }
  if (static_cast<int>(brackets.size()) != t)
    throw std::runtime_error("zero bracketing failed: found " + std::to_string(brackets.size()) + " of " +
                             std::to_string(t) + " sign changes");
  std::vector<BigFloat> zeros;
  // brackets were collected from the right end; reverse for increasing order
  for (int idx = t - 1; idx >= 0; --idx) {
    auto [a, b] = brackets[idx];
    long double fa = eval_ld(al, be, t, a);
    for (int it = 0; it < 80 && a < b; ++it) {
      long double m = (a + b) / 2;
      if (m <= a || m >= b) break;
      long double fm = eval_ld(al, be, t, m);
      if (fm == 0) {
        a = b = m;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    BigFloat x = BigFloat(static_cast<double>(a)) + BigFloat(static_cast<double>(a - static_cast<double>(a)));
    x = (x + BigFloat(static_cast<double>(b)) + BigFloat(static_cast<double>(b - static_cast<double>(b)))) / 2;
    BigFloat tolx = ldexp(BigFloat(1), -static_cast<int>(bits) - 8);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      BigFloat p, dp;
      eval_monic(r, t, x, p, dp);
      if (dp == 0) break;
      BigFloat step = p / dp;
      x -= step;
      if (abs(step) <= tolx * (1 + abs(x))) {
        converged = true;
        break;
      }
    }
    int k = t - 1 - idx;
    if (!converged) throw std::runtime_error("zero refinement did not converge at index " + std::to_string(k));
    if (!zeros.empty() && !(x > zeros.back()))
      throw std::runtime_error("zero refinement did not converge at index " + std::to_string(k) + " (order)");
    zeros.push_back(x);
  }
  for (auto& z : zeros) z.precision(bits + 32);
  return zeros;
}

std::vector<BigFloat> jacobi_zeros(int a, int b, int t, unsigned bits) {
  if (a < 0 || b < 0) throw std::invalid_argument("jacobi_zeros: parameters must be > -1");
  return recurrence_zeros(jacobi_recurrence(a, b, t), t, Rat(-1), Rat(1), bits);
}

}  // namespace cub
