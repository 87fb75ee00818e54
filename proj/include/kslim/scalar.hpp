#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kslim {

/// Coefficient field of a Scalar: the rationals or the Gaussian rationals.
enum class Field { Q, QI };

/// Exact scalar over Q or Q(i). Rational parts are always reduced with a
/// positive denominator (mpq_class keeps them canonical). Arithmetic between
/// mixed fields lands in Q(i); a Q-tagged value has zero imaginary part.
class Scalar {
 public:
  Scalar() : re_(0), im_(0), field_(Field::Q) {}
  Scalar(long n) : re_(n), im_(0), field_(Field::Q) {}  // NOLINT: implicit by design
  explicit Scalar(mpq_class r) : re_(std::move(r)), im_(0), field_(Field::Q) {}
  Scalar(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)), field_(Field::QI) {}

  static Scalar rational(long num, long den);
  static Scalar gaussian(const Scalar& re, const Scalar& im);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses "p/q" or "p" (arbitrary-precision, base 10). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Scalar parse_rational(const std::string& text);

  Field field() const { return field_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  /// -1/0/+1 of a real value; throws if the imaginary part is nonzero.
  int sign() const;

  Scalar conj() const;
  Scalar inverse() const;  // throws on zero

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Equality is value equality; the field tag only drives promotion and
  // printing, so 1 over Q compares equal to 1+0i over Q(i).
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" (or "p") for real values; "re+im*i" textual form otherwise.
  std::string str() const;

 private:
  mpq_class re_, im_;
  Field field_;

  void promote_with(const Scalar& o) {
    if (o.field_ == Field::QI) field_ = Field::QI;
  }
};

std::string rat_str(const mpq_class& q);

/// i^k for any integer k, as an exact Scalar.
Scalar i_power(long k);

}  // namespace kslim
