#include "pcm/exact/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace pcm::exact {

bool is_squarefree_radicand(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class rational, mpq_class radical, std::int64_t radicand)
    : rational_(std::move(rational)), radical_(std::move(radical)), radicand_(radicand) {
  rational_.canonicalize();
  radical_.canonicalize();
  if (sgn(radical_) != 0 && !is_squarefree_radicand(radicand_)) {
    throw FieldMismatch("radicand " + std::to_string(radicand_) +
                        " is not a square-free integer >= 2");
  }
  normalize();
}

Scalar Scalar::sqrt_of(std::int64_t radicand, mpq_class coeff) {
  return Scalar(mpq_class(0), std::move(coeff), radicand);
}

Scalar Scalar::from_ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(mpq_class(num, den));
}

void Scalar::normalize() {
  if (sgn(radical_) == 0) radicand_ = 0;
}

std::int64_t Scalar::merged_radicand(const Scalar& other) const {
  if (is_rational()) return other.radicand_;
  if (other.is_rational()) return radicand_;
  if (radicand_ != other.radicand_) {
    throw FieldMismatch("cannot combine sqrt" + std::to_string(radicand_) + " and sqrt" +
                        std::to_string(other.radicand_));
  }
  return radicand_;
}

int Scalar::sign() const {
  const int sa = sgn(rational_);
  const int sb = sgn(radical_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d.
  const mpq_class a2 = rational_ * rational_;
  const mpq_class b2d = radical_ * radical_ * radicand_;
  const int c = cmp(a2, b2d);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double Scalar::to_double() const {
  return rational_.get_d() + radical_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_rational()) return Scalar(mpq_class(1) / rational_);
  // 1/(a + b r) = (a - b r) / (a^2 - b^2 d); the norm is nonzero for square-free d.
  const mpq_class norm = rational_ * rational_ - radical_ * radical_ * radicand_;
  return Scalar(rational_ / norm, -radical_ / norm, radicand_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rational_ = -r.rational_;
  r.radical_ = -r.radical_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  radicand_ = merged_radicand(rhs);
  rational_ += rhs.rational_;
  radical_ += rhs.radical_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  radicand_ = merged_radicand(rhs);
  rational_ -= rhs.rational_;
  radical_ -= rhs.radical_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const std::int64_t d = merged_radicand(rhs);
  mpq_class a = rational_ * rhs.rational_ + radical_ * rhs.radical_ * d;
  mpq_class b = rational_ * rhs.radical_ + radical_ * rhs.rational_;
  rational_ = std::move(a);
  radical_ = std::move(b);
  radicand_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

std::string Scalar::str() const {
  std::ostringstream os;
  const bool has_rat = sgn(rational_) != 0;
  if (has_rat || is_rational()) os << rational_.get_str();
  if (!is_rational()) {
    mpq_class coeff = radical_;
    if (sgn(coeff) < 0) {
      os << '-';
      coeff = -coeff;
    } else if (has_rat) {
      os << '+';
    }
    if (coeff != 1) os << coeff.get_str() << '*';
    os << "sqrt" << radicand_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace pcm::exact
