#include "pcm/exact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pcm::exact {

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

namespace {

std::uint32_t degree_of(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::variable(const VarList& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw VariableError("variable index out of range");
  Monomial m(vars->size(), 0);
  m[index] = 1;
  return monomial(vars, std::move(m), Scalar(1));
}

Poly Poly::variable(const VarList& vars, std::string_view name) {
  if (vars) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it != vars->end()) return variable(vars, static_cast<std::size_t>(it - vars->begin()));
  }
  throw VariableError("unknown variable '" + std::string(name) + "'");
}

Poly Poly::monomial(const VarList& vars, Monomial exponents, Scalar coeff) {
  Poly p;
  p.vars_ = vars;
  if (exponents.size() != p.nvars()) throw VariableError("monomial arity mismatch");
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exponents), std::move(coeff));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Scalar Poly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial '" + str() + "' is not constant");
  return terms_.empty() ? Scalar() : terms_.begin()->second;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Monomial Poly::lifted(const Monomial& m, std::size_t n) const {
  if (m.size() == n) return m;
  // Only constants (empty monomial) are ever lifted.
  return Monomial(n, 0);
}

VarList Poly::unify(const Poly& a, const Poly& b) {
  if (!a.vars_) return b.vars_;
  if (!b.vars_) return a.vars_;
  if (same_vars(a.vars_, b.vars_)) return a.vars_;
  throw VariableError("polynomials over different variable lists");
}

Poly Poly::with_vars(const VarList& vars) const {
  if (same_vars(vars_, vars)) {
    Poly r = *this;
    r.vars_ = vars;
    return r;
  }
  if (vars_) throw VariableError("polynomials over different variable lists");
  Poly r;
  r.vars_ = vars;
  const std::size_t n = r.nvars();
  for (const auto& [m, c] : terms_) r.terms_.emplace(lifted(m, n), c);
  return r;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  VarList v = unify(*this, rhs);
  if (vars_ != v) *this = with_vars(v);
  const std::size_t n = nvars();
  for (const auto& [m, c] : rhs.terms_) add_term(lifted(m, n), c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  VarList v = unify(*this, rhs);
  if (vars_ != v) *this = with_vars(v);
  const std::size_t n = nvars();
  for (const auto& [m, c] : rhs.terms_) add_term(lifted(m, n), -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.vars_ = Poly::unify(a, b);
  const std::size_t n = r.nvars();
  for (const auto& [ma, ca] : a.terms_) {
    const Monomial la = a.lifted(ma, n);
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = b.lifted(mb, n);
      for (std::size_t k = 0; k < n; ++k) m[k] += la[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  return (a - b).is_zero();
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Scalar(1));
  result = result.with_vars(vars_);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::derive(std::string_view var) const {
  if (vars_) {
    auto it = std::find(vars_->begin(), vars_->end(), var);
    if (it != vars_->end()) return derive(static_cast<std::size_t>(it - vars_->begin()));
  }
  throw VariableError("unknown variable '" + std::string(var) + "'");
}

Poly Poly::derive(std::size_t var_index) const {
  if (var_index >= nvars()) throw VariableError("variable index out of range");
  Poly r;
  r.vars_ = vars_;
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Monomial d = m;
    d[var_index] -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(m[var_index])));
  }
  return r;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars()) {
    throw VariableError("evaluation point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has " + std::to_string(nvars()) +
                        " variables");
  }
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (std::uint32_t e = 0; e < m[k]; ++e) t *= point[k];
    }
    total += t;
  }
  return total;
}

Scalar Poly::eval(std::span<const mpq_class> point) const {
  std::vector<Scalar> p(point.begin(), point.end());
  return eval(std::span<const Scalar>(p));
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  VarList v = unify(a, b);
  Poly rem = a.with_vars(v);
  const Poly div = b.with_vars(v);
  Poly quot;
  quot.vars_ = v;
  const Monomial& lb = div.leading_monomial();
  const Scalar lc_inv = div.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    Monomial q(lr.size());
    for (std::size_t k = 0; k < lr.size(); ++k) {
      if (lr[k] < lb[k]) throw std::domain_error("inexact polynomial division");
      q[k] = lr[k] - lb[k];
    }
    Poly t = monomial(v, std::move(q), rem.leading_coefficient() * lc_inv);
    rem -= t * div;
    quot += t;
  }
  return quot;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= leading_coefficient().inverse();
  return r;
}

namespace {

std::string monomial_text(const Monomial& m, const VarList& vars) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += (*vars)[k];
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m, vars_);
    const bool mixed = !c.is_rational() && sgn(c.rational_part()) != 0;
    const bool negative = !mixed && c.sign() < 0;
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mixed) {
      os << '(' << mag.str() << ')';
      if (!mono.empty()) os << '*' << mono;
    } else if (mono.empty()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << '*';
      os << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace pcm::exact
