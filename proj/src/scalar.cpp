#include "kslim/scalar.hpp"

namespace kslim {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::gaussian(const Scalar& re, const Scalar& im) {
  if (!re.is_real() || !im.is_real())
    throw std::invalid_argument("gaussian parts must be rational");
  return Scalar(re.re_, im.re_);
}

Scalar Scalar::parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(text);
      return Scalar(mpq_class(num));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: \"" + text + "\"");
  }
}

int Scalar::sign() const {
  if (im_ != 0) throw std::domain_error("sign of a non-real scalar");
  return sgn(re_);
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.im_ = -out.im_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  mpq_class n = re_ * re_ + im_ * im_;
  Scalar out = *this;
  out.re_ = re_ / n;
  out.im_ = -im_ / n;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  promote_with(o);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  promote_with(o);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  promote_with(o);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rat_str(const mpq_class& q) {
  return q.get_str();  // canonical "p" or "p/q"
}

std::string Scalar::str() const {
  if (is_real()) return rat_str(re_);
  return rat_str(re_) + "+" + rat_str(im_) + "*i";
}

Scalar i_power(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

}  // namespace kslim
