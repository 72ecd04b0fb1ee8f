#include "cubature/scalar.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cub {

namespace {

unsigned g_precision = kDefaultPrecision;

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

Rat canon(Rat r) {
  r.canonicalize();
  return r;
}

int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace

unsigned working_precision() { return g_precision; }

void set_working_precision(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("bigfloat precision must be at least 64 bits");
  g_precision = bits;
  BigFloat::default_precision(digits10_for_bits(bits));
}

void sync_thread_precision() {
  const unsigned d = digits10_for_bits(g_precision);
  if (BigFloat::default_precision() != d) BigFloat::default_precision(d);
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(g_precision) { set_working_precision(bits); }
PrecisionGuard::~PrecisionGuard() { set_working_precision(saved_); }

namespace {
struct InitPrecision {
  InitPrecision() { set_working_precision(kDefaultPrecision); }
} init_precision_once;
}  // namespace

BigFloat bf_pi() { return boost::math::constants::pi<BigFloat>(); }

ExactScalar::ExactScalar() : v_(Rat(0)) {}
ExactScalar::ExactScalar(long v) : v_(Rat(v)) {}
ExactScalar::ExactScalar(const Rat& r) : v_(canon(r)) {}

ExactScalar ExactScalar::ratio(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  return ExactScalar(frac(p, q));
}

ExactScalar ExactScalar::quadratic(const Rat& a, const Rat& b, long d) {
  if (d <= 1) {
    if (d == 1) return ExactScalar(a + b);
    throw std::invalid_argument("quadratic field needs d > 1");
  }
  Int root;
  if (squarefree_part(Int(d), &root) != d) throw std::invalid_argument("d must be square-free");
  ExactScalar s;
  s.v_ = Quad{canon(a), canon(b), d};
  s.normalize();
  return s;
}

ExactScalar ExactScalar::bigfloat(const BigFloat& x, unsigned bits) {
  ExactScalar s;
  s.v_ = x;
  s.prec_ = bits ? bits : g_precision;
  if (s.prec_ < 64) throw std::invalid_argument("bigfloat precision must be at least 64 bits");
  return s;
}

ExactScalar ExactScalar::from_double(double x) { return bigfloat(BigFloat(x)); }

void ExactScalar::normalize() {
  if (auto* q = std::get_if<Quad>(&v_)) {
    if (q->b == 0) {
      Rat a = q->a;
      v_ = a;
    }
  }
}

ExactScalar::Kind ExactScalar::kind() const {
  switch (v_.index()) {
    case 0: return Kind::rational;
    case 1: return Kind::quadratic;
    default: return Kind::bigfloat;
  }
}

long ExactScalar::field() const {
  if (auto* q = std::get_if<Quad>(&v_)) return q->d;
  return 0;
}

const Rat& ExactScalar::rational() const {
  if (auto* r = std::get_if<Rat>(&v_)) return *r;
  throw std::domain_error("scalar is not rational: " + str());
}

const Quad& ExactScalar::quad() const {
  if (auto* q = std::get_if<Quad>(&v_)) return *q;
  throw std::domain_error("scalar is not quadratic");
}

const BigFloat& ExactScalar::big() const {
  if (auto* b = std::get_if<BigFloat>(&v_)) return *b;
  throw std::domain_error("scalar is not a bigfloat");
}

Rat ExactScalar::rational_part() const {
  if (auto* r = std::get_if<Rat>(&v_)) return *r;
  if (auto* q = std::get_if<Quad>(&v_)) return q->a;
  throw std::domain_error("bigfloat has no rational part");
}

Rat ExactScalar::irrational_part() const {
  if (std::holds_alternative<Rat>(v_)) return Rat(0);
  if (auto* q = std::get_if<Quad>(&v_)) return q->b;
  throw std::domain_error("bigfloat has no irrational part");
}

BigFloat ExactScalar::to_bigfloat() const {
  if (auto* r = std::get_if<Rat>(&v_)) {
    return BigFloat(r->get_num_mpz_t()) / BigFloat(r->get_den_mpz_t());
  }
  if (auto* q = std::get_if<Quad>(&v_)) {
    BigFloat a = BigFloat(q->a.get_num_mpz_t()) / BigFloat(q->a.get_den_mpz_t());
    BigFloat b = BigFloat(q->b.get_num_mpz_t()) / BigFloat(q->b.get_den_mpz_t());
    return a + b * sqrt(BigFloat(q->d));
  }
  return std::get<BigFloat>(v_);
}

long double ExactScalar::to_ld() const {
  if (auto* r = std::get_if<Rat>(&v_)) {
    // long double keeps 64 bits; go through the bigfloat to avoid overflow of num/den
    if (mpz_sizeinbase(r->get_num_mpz_t(), 2) < 60 && mpz_sizeinbase(r->get_den_mpz_t(), 2) < 60)
      return static_cast<long double>(r->get_num().get_si()) / static_cast<long double>(r->get_den().get_si());
  }
  return to_bigfloat().convert_to<long double>();
}

double ExactScalar::to_double() const { return static_cast<double>(to_ld()); }

int ExactScalar::sign() const {
  if (auto* r = std::get_if<Rat>(&v_)) return rat_sign(*r);
  if (auto* q = std::get_if<Quad>(&v_)) {
    int sa = rat_sign(q->a), sb = rat_sign(q->b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rat a2 = q->a * q->a;
    Rat b2d = q->b * q->b * q->d;
    return a2 > b2d ? sa : sb;
  }
  const auto& b = std::get<BigFloat>(v_);
  return b > 0 ? 1 : (b < 0 ? -1 : 0);
}

bool ExactScalar::is_zero() const { return sign() == 0; }

std::string ExactScalar::str() const {
  if (auto* r = std::get_if<Rat>(&v_)) return r->get_str();
  if (auto* q = std::get_if<Quad>(&v_)) {
    std::string out = q->a.get_str();
    if (q->b < 0) {
      out += "-" + Rat(-q->b).get_str();
    } else {
      out += "+" + q->b.get_str();
    }
    out += "*sqrt(" + std::to_string(q->d) + ")";
    return out;
  }
  const auto& b = std::get<BigFloat>(v_);
  std::ostringstream os;
  os.precision(digits10_for_bits(prec_) + 2);
  os << std::scientific << b;
  return os.str();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar s = *this;
  if (auto* r = std::get_if<Rat>(&s.v_)) {
    *r = -*r;
  } else if (auto* q = std::get_if<Quad>(&s.v_)) {
    q->a = -q->a;
    q->b = -q->b;
  } else {
    auto& b = std::get<BigFloat>(s.v_);
    b = -b;
  }
  return s;
}

namespace {

// Promote both operands to a common representation. Returns the field d
// (0 rational, >1 quadratic) or -1 for bigfloat.
long join_field(const ExactScalar& a, const ExactScalar& b) {
  if (!a.is_exact() || !b.is_exact()) return -1;
  long da = a.field(), db = b.field();
  if (da && db && da != db)
    throw std::domain_error("mixing Q(sqrt " + std::to_string(da) + ") with Q(sqrt " + std::to_string(db) + ")");
  return da ? da : db;
}

unsigned join_prec(const ExactScalar& a, const ExactScalar& b) {
  unsigned p = std::max(a.precision(), b.precision());
  return p ? p : working_precision();
}

}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  long d = join_field(*this, o);
  if (d < 0) {
    unsigned p = join_prec(*this, o);
    *this = bigfloat(to_bigfloat() + o.to_bigfloat(), p);
  } else if (d == 0) {
    std::get<Rat>(v_) += std::get<Rat>(o.v_);
  } else {
    Quad r{rational_part() + o.rational_part(), irrational_part() + o.irrational_part(), d};
    v_ = r;
    normalize();
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  long d = join_field(*this, o);
  if (d < 0) {
    unsigned p = join_prec(*this, o);
    *this = bigfloat(to_bigfloat() * o.to_bigfloat(), p);
  } else if (d == 0) {
    std::get<Rat>(v_) *= std::get<Rat>(o.v_);
  } else {
    Rat a1 = rational_part(), b1 = irrational_part();
    Rat a2 = o.rational_part(), b2 = o.irrational_part();
    Quad r{a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d};
    v_ = r;
    normalize();
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  long d = join_field(*this, o);
  if (d < 0) {
    unsigned p = join_prec(*this, o);
    *this = bigfloat(to_bigfloat() / o.to_bigfloat(), p);
  } else if (d == 0) {
    std::get<Rat>(v_) /= std::get<Rat>(o.v_);
  } else {
    Rat a2 = o.rational_part(), b2 = o.irrational_part();
    Rat norm = a2 * a2 - b2 * b2 * d;
    ExactScalar conj = quadratic(a2 / norm, -b2 / norm, d);
    *this *= conj;
  }
  return *this;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.field() != b.field()) return false;  // normalized forms differ
    return a.rational_part() == b.rational_part() && a.irrational_part() == b.irrational_part();
  }
  return a.to_bigfloat() == b.to_bigfloat();
}

ExactScalar pow(const ExactScalar& x, unsigned e) {
  ExactScalar r(1), base = x;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

long squarefree_part(const Int& n, Int* root) {
  if (n <= 0) throw std::domain_error("squarefree_part of nonpositive");
  Int m = n, r = 1, d = 1;
  for (Int p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      r *= p;
    }
    if (m % p == 0) {
      m /= p;
      d *= p;
    }
  }
  d *= m;
  if (root) *root = r;
  if (!d.fits_slong_p()) throw std::overflow_error("square-free part too large");
  return d.get_si();
}

ExactScalar sqrt_rational(const Rat& r) {
  if (r < 0) throw std::domain_error("sqrt of negative rational");
  if (r == 0) return ExactScalar(0);
  Int pq = r.get_num() * r.get_den();
  Int root;
  long d = squarefree_part(pq, &root);
  Rat coef(root, r.get_den());
  if (d == 1) return ExactScalar(coef);
  return ExactScalar::quadratic(Rat(0), coef, d);
}

ExactScalar sqrt_scalar(const ExactScalar& x) {
  if (x.is_rational()) return sqrt_rational(x.rational());
  if (x.sign() < 0) throw std::domain_error("sqrt of negative");
  return ExactScalar::bigfloat(sqrt(x.to_bigfloat()), std::max(x.precision(), working_precision()));
}

long common_field(const std::vector<const ExactScalar*>& xs) {
  long d = 0;
  for (const auto* x : xs) {
    if (!x->is_exact()) return -1;
    long e = x->field();
    if (e == 0) continue;
    if (d == 0) d = e;
    else if (d != e)
      throw std::domain_error("formula mixes Q(sqrt " + std::to_string(d) + ") and Q(sqrt " + std::to_string(e) + ")");
  }
  return d;
}

ExactScalar ExactScalar::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  auto parse_rat = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty rational");
    Rat r;
    if (r.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
    r.canonicalize();
    return r;
  };
  auto k = s.find("*sqrt(");
  if (k != std::string::npos) {
    auto close = s.find(')', k);
    if (close == std::string::npos || close + 1 != s.size()) throw std::invalid_argument("bad quadratic: " + s);
    long d = std::stol(s.substr(k + 6, close - k - 6));
    size_t split = std::string::npos;
    for (size_t j = k; j-- > 1;) {
      if (s[j] == '+' || s[j] == '-') {
        split = j;
        break;
      }
    }
    Rat a(0), b;
    if (split == std::string::npos) {
      b = parse_rat(s.substr(0, k));
    } else {
      a = parse_rat(s.substr(0, split));
      b = parse_rat(s.substr(split, k - split));
    }
    return quadratic(a, b, d);
  }
  if (s.find_first_of(".eEn") != std::string::npos) {
    BigFloat x(s);
    return bigfloat(x);
  }
  return ExactScalar(parse_rat(s));
}

}  // namespace cub
