#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <variant>
#include <vector>

namespace cub {

using Int = mpz_class;
using Rat = mpq_class;
using BigFloat = boost::multiprecision::mpfr_float;

// p/q in canonical form (gmpxx does not reduce two-argument constructors).
inline Rat frac(const Int& p, const Int& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

constexpr unsigned kDefaultPrecision = 256;

// Working precision (bits) used for every new bigfloat value.
unsigned working_precision();
void set_working_precision(unsigned bits);
// Copies the working precision into the calling thread's bigfloat default.
void sync_thread_precision();

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

BigFloat bf_pi();

// a + b*sqrt(d), d square-free and > 1.
struct Quad {
  Rat a, b;
  long d = 0;
};

class ExactScalar {
 public:
  enum class Kind { rational, quadratic, bigfloat };

  ExactScalar();
  ExactScalar(long v);  // NOLINT implicit
  ExactScalar(int v) : ExactScalar(static_cast<long>(v)) {}  // NOLINT
  ExactScalar(const Rat& r);  // NOLINT
  static ExactScalar ratio(long p, long q);
  static ExactScalar quadratic(const Rat& a, const Rat& b, long d);
  static ExactScalar bigfloat(const BigFloat& x, unsigned bits = 0);
  static ExactScalar from_double(double x);
  // Accepts "p", "p/q", "p/q+r/s*sqrt(d)" and decimal floats.
  static ExactScalar parse(const std::string& s);

  Kind kind() const;
  bool is_exact() const { return kind() != Kind::bigfloat; }
  bool is_rational() const { return kind() == Kind::rational; }
  long field() const;
  unsigned precision() const { return prec_; }

  const Rat& rational() const;
  const Quad& quad() const;
  const BigFloat& big() const;
  Rat rational_part() const;
  Rat irrational_part() const;

  BigFloat to_bigfloat() const;
  long double to_ld() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const;
  std::string str() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return b < a; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return !(b < a); }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return !(a < b); }

 private:
  void normalize();
  std::variant<Rat, Quad, BigFloat> v_;
  unsigned prec_ = 0;
};

using ScalarVec = std::vector<ExactScalar>;

ExactScalar pow(const ExactScalar& x, unsigned e);
ExactScalar abs(const ExactScalar& x);
// Exact square root of a nonnegative rational, as r or b*sqrt(d).
ExactScalar sqrt_rational(const Rat& r);
// sqrt of an exact value when it lands in a quadratic field, else bigfloat.
ExactScalar sqrt_scalar(const ExactScalar& x);
long squarefree_part(const Int& n, Int* root);

// Common field of a set of scalars: 0 when all rational, d for Q(sqrt d),
// -1 when any value is a bigfloat. Throws on two different d.
long common_field(const std::vector<const ExactScalar*>& xs);

}  // namespace cub
