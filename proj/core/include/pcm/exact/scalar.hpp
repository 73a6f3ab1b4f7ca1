#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pcm::exact {

/// Raised when two scalars from different quadratic fields meet, or when a
/// radicand is not a square-free integer >= 2.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element a + b*sqrt(D) of the quadratic field Q(sqrt D).
///
/// The radicand is carried by the value itself and is only meaningful while
/// the radical part is nonzero, so rationals mix freely with any field.
/// Mixing two irrational values over different radicands throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : rational_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : rational_(std::move(value)) {  // NOLINT
    rational_.canonicalize();
  }
  Scalar(mpq_class rational, mpq_class radical, std::int64_t radicand);

  /// coeff * sqrt(radicand)
  static Scalar sqrt_of(std::int64_t radicand, mpq_class coeff = 1);
  static Scalar from_ratio(long num, long den);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& radical_part() const { return radical_; }
  std::int64_t radicand() const { return radicand_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(radical_) == 0; }
  bool is_rational() const { return sgn(radical_) == 0; }
  bool is_one() const { return is_rational() && rational_ == 1; }
  int sign() const;
  double to_double() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rational_ == b.rational_ && a.radical_ == b.radical_ &&
           (a.is_rational() || a.radicand_ == b.radicand_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order on values; throws FieldMismatch across fields.
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }

  /// Lossless text form, e.g. "-1", "3/4", "sqrt2", "1/2+3/2*sqrt2".
  std::string str() const;

 private:
  std::int64_t merged_radicand(const Scalar& other) const;
  void normalize();

  mpq_class rational_{0};
  mpq_class radical_{0};
  std::int64_t radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// True iff d >= 2 and no prime square divides d.
bool is_squarefree_radicand(std::int64_t d);

}  // namespace pcm::exact
