#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/exact/scalar.hpp"

namespace pcm::exact {

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: total degree, then the exponent
/// of the earliest declared variable.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class VariableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multivariate polynomial over Q(sqrt D).
///
/// A polynomial without a variable list is a constant and combines with any
/// other polynomial. Two polynomials with variable lists must agree on them.
/// Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Poly() = default;
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly variable(const VarList& vars, std::size_t index);
  static Poly variable(const VarList& vars, std::string_view name);
  static Poly monomial(const VarList& vars, Monomial exponents, Scalar coeff);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws if it has a non-constant term.
  Scalar constant_value() const;
  std::uint32_t total_degree() const;

  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  /// Copy carrying `vars`; constants lift, others must already agree.
  Poly with_vars(const VarList& vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned exponent) const;

  /// Exact partial derivative. Unknown names throw VariableError.
  Poly derive(std::string_view var) const;
  Poly derive(std::size_t var_index) const;

  /// Exact substitution; `point` follows the declared variable order.
  Scalar eval(std::span<const Scalar> point) const;
  Scalar eval(std::span<const mpq_class> point) const;

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  static Poly divide_exact(const Poly& a, const Poly& b);

  /// Poly divided by its leading coefficient (zero stays zero).
  Poly monic() const;

  /// Text form in the parser's syntax, terms in graded-lex order.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  static VarList unify(const Poly& a, const Poly& b);
  Monomial lifted(const Monomial& m, std::size_t n) const;

  VarList vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace pcm::exact
