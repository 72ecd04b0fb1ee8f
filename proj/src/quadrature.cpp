#include "cubature/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace cub {

namespace {

void require_interval(const SpaceDescriptor& m) {
  if (m.kind != SpaceKind::jacobi_interval && m.kind != SpaceKind::moment_interval)
    throw std::invalid_argument("quadrature needs a one-dimensional measure, got " + m.name());
}

std::vector<Rat> shifted(const std::vector<Rat>& m, const Rat& c, int sign) {
  // moments of sign * (x - c) dmu
  std::vector<Rat> out(m.size() - 1);
  for (std::size_t k = 0; k + 1 < m.size(); ++k) out[k] = Rat(sign) * (m[k + 1] - c * m[k]);
  return out;
}

Formula from_nodes(const SpaceDescriptor& measure, std::vector<ExactScalar> x, std::vector<ExactScalar> w,
                   int degree, const std::string& prov) {
  Formula f;
  f.space = measure;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.points.push_back({x[i]});
    f.weights.push_back(w[i]);
  }
  f.claimed_degree = degree;
  f.provenance = prov;
  return f;
}

// Gauss nodes/weights of the measure with raw moments m on [lo, hi].
void gauss_core(const std::vector<Rat>& m, int t, const Rat& lo, const Rat& hi, unsigned bits,
                std::vector<BigFloat>& x, std::vector<BigFloat>& w) {
  Recurrence r = recurrence_from_moments(m, t);
  x = recurrence_zeros(r, t, lo, hi, bits);
  PrecisionGuard guard(bits + 32);
  BigFloat h = 1;
  for (int k = 0; k < t; ++k) h *= ExactScalar(r.beta[k]).to_bigfloat();
  w.clear();
  for (const auto& xi : x) {
    BigFloat p, dp, prev;
    eval_monic(r, t, xi, p, dp, &prev);
    w.push_back(h / (dp * prev));
  }
}

}  // namespace

std::vector<Rat> interval_moments(const SpaceDescriptor& measure, int kmax) {
  require_interval(measure);
  if (measure.kind == SpaceKind::jacobi_interval) return jacobi_moments(measure.a, measure.b, kmax);
  if (kmax >= static_cast<int>(measure.moments->size()))
    throw std::invalid_argument("measure has only " + std::to_string(measure.moments->size()) + " moments");
  std::vector<Rat> out;
  for (int k = 0; k <= kmax; ++k) out.push_back((*measure.moments)[k] / (*measure.moments)[0]);
  return out;
}

Rat interval_lo(const SpaceDescriptor& m) {
  require_interval(m);
  return m.kind == SpaceKind::jacobi_interval ? Rat(-1) : m.lo;
}

Rat interval_hi(const SpaceDescriptor& m) {
  require_interval(m);
  return m.kind == SpaceKind::jacobi_interval ? Rat(1) : m.hi;
}

Formula gauss_quadrature(const SpaceDescriptor& measure, int t, unsigned bits) {
  if (t < 1) throw std::invalid_argument("gauss_quadrature needs t >= 1");
  std::vector<Rat> m = interval_moments(measure, 2 * t - 1);
  std::vector<BigFloat> x, w;
  gauss_core(m, t, interval_lo(measure), interval_hi(measure), bits, x, w);
  std::vector<ExactScalar> xs, ws;
  for (int i = 0; i < t; ++i) {
    xs.push_back(ExactScalar::bigfloat(x[i], bits));
    ws.push_back(ExactScalar::bigfloat(w[i], bits));
  }
  return from_nodes(measure, xs, ws, 2 * t - 1, "gauss " + std::to_string(t) + " on " + measure.name());
}

Formula lobatto_radau_quadrature(const SpaceDescriptor& measure, int t, EndpointRule kind, unsigned bits) {
  const Rat lo = interval_lo(measure), hi = interval_hi(measure);
  std::vector<ExactScalar> xs, ws;
  if (kind == EndpointRule::radau) {
    if (t < 0 || t % 2) throw std::invalid_argument("radau rule needs an even degree");
    int k = t / 2;  // interior nodes
    std::vector<Rat> m = interval_moments(measure, 2 * k + 1);
    ExactScalar rest(1);
    xs.push_back(ExactScalar(lo));
    ws.push_back(ExactScalar(0));
    if (k > 0) {
      std::vector<BigFloat> x, w;
      gauss_core(shifted(m, lo, 1), k, lo, hi, bits, x, w);
      PrecisionGuard guard(bits + 32);
      BigFloat total = 0;
      for (int i = 0; i < k; ++i) {
        BigFloat wi = w[i] / (x[i] - ExactScalar(lo).to_bigfloat());
        total += wi;
        xs.push_back(ExactScalar::bigfloat(x[i], bits));
        ws.push_back(ExactScalar::bigfloat(wi, bits));
      }
      ws[0] = ExactScalar::bigfloat(BigFloat(1) - total, bits);
    } else {
      ws[0] = ExactScalar(1);
    }
    return from_nodes(measure, xs, ws, t, "radau degree " + std::to_string(t) + " on " + measure.name());
  }
  if (t < 1 || t % 2 == 0) throw std::invalid_argument("lobatto rule needs an odd degree");
  int k = (t - 1) / 2;  // interior nodes
  std::vector<Rat> m = interval_moments(measure, 2 * k + 2);
  if (k == 0) {
    // two endpoints only: match mass and first moment
    Rat wh = (m[1] - lo) / (hi - lo);
    return from_nodes(measure, {ExactScalar(lo), ExactScalar(hi)}, {ExactScalar(1 - wh), ExactScalar(wh)}, t,
                      "lobatto degree 1 on " + measure.name());
  }
  std::vector<Rat> mm = shifted(shifted(m, lo, 1), hi, -1);  // (x-lo)(hi-x) dmu
  std::vector<BigFloat> x, w;
  gauss_core(mm, k, lo, hi, bits, x, w);
  PrecisionGuard guard(bits + 32);
  BigFloat blo = ExactScalar(lo).to_bigfloat(), bhi = ExactScalar(hi).to_bigfloat();
  BigFloat s0 = 0, s1 = 0;
  std::vector<BigFloat> wi(k);
  for (int i = 0; i < k; ++i) {
    wi[i] = w[i] / ((x[i] - blo) * (bhi - x[i]));
    s0 += wi[i];
    s1 += wi[i] * x[i];
  }
  BigFloat r0 = BigFloat(1) - s0, r1 = ExactScalar(m[1]).to_bigfloat() - s1;
  BigFloat w_hi = (r1 - blo * r0) / (bhi - blo);
  BigFloat w_lo = r0 - w_hi;
  xs.push_back(ExactScalar(lo));
  ws.push_back(ExactScalar::bigfloat(w_lo, bits));
  for (int i = 0; i < k; ++i) {
    xs.push_back(ExactScalar::bigfloat(x[i], bits));
    ws.push_back(ExactScalar::bigfloat(wi[i], bits));
  }
  xs.push_back(ExactScalar(hi));
  ws.push_back(ExactScalar::bigfloat(w_hi, bits));
  return from_nodes(measure, xs, ws, t, "lobatto degree " + std::to_string(t) + " on " + measure.name());
}

}  // namespace cub
