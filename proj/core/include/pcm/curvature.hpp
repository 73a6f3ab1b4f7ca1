#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcm/report.hpp"
#include "pcm/structure.hpp"

namespace pcm {

/// Christoffel data: (*this)(i, j) = nabla_{E_i} E_j in frame components.
class Connection {
 public:
  Connection() = default;
  explicit Connection(std::size_t dim) : dim_(dim), gamma_(dim * dim, FieldVec(dim)) {}

  std::size_t dim() const { return dim_; }
  FieldVec& operator()(std::size_t i, std::size_t j) { return gamma_[i * dim_ + j]; }
  const FieldVec& operator()(std::size_t i, std::size_t j) const { return gamma_[i * dim_ + j]; }

 private:
  std::size_t dim_ = 0;
  std::vector<FieldVec> gamma_;
};

/// (*this)(i, j, k) = R(E_i, E_j) E_k.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(std::size_t dim) : dim_(dim), r_(dim * dim * dim, FieldVec(dim)) {}

  std::size_t dim() const { return dim_; }
  FieldVec& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return r_[(i * dim_ + j) * dim_ + k];
  }
  const FieldVec& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return r_[(i * dim_ + j) * dim_ + k];
  }

  /// R(X, Y) Z for arbitrary fields, by multilinearity.
  FieldVec apply(const FieldVec& x, const FieldVec& y, const FieldVec& z) const;

 private:
  std::size_t dim_ = 0;
  std::vector<FieldVec> r_;
};

/// Levi-Civita connection from the Koszul formula and the inverse Gram matrix.
Connection levi_civita(const ParacontactData& s);

/// nabla_{E_i} v.
FieldVec covariant_derivative(const FrameContext& f, const Connection& nabla, std::size_t i,
                              const FieldVec& v);

/// Torsion-free and metric-compatible, exactly.
AxiomReport check_connection(const ParacontactData& s, const Connection& nabla);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
RiemannTensor riemann(const ParacontactData& s, const Connection& nabla);

/// Antisymmetry, first Bianchi identity, and skew-symmetry of g(R(.,.)., .).
AxiomReport curvature_identities(const ParacontactData& s, const RiemannTensor& r);

/// R(X,Y)xi = kappa (eta(Y)X - eta(X)Y) + mu (eta(Y)hX - eta(X)hY) on all frame pairs.
AxiomReport nullity_verify(const ParacontactData& s, const RiemannTensor& r, const PolyMatrix& h,
                           const Scalar& kappa, const Scalar& mu);

struct NullityVerdict {
  enum class Kind { kConstants, kFamily, kNone };
  Kind kind = Kind::kNone;
  /// Set for kConstants; for kFamily the determined value, or unset when free.
  std::optional<Scalar> kappa;
  std::optional<Scalar> mu;
  /// Failing witness for kNone.
  std::string witness;
  std::string location;

  bool is_nullity_space() const { return kind != Kind::kNone; }
};

/// Solves for constant (kappa, mu) from R(X, xi)xi = kappa (X - eta(X)xi) + mu hX by
/// coefficient matching, then confirms the full condition on all pairs.
NullityVerdict nullity_infer(const ParacontactData& s, const RiemannTensor& r, const PolyMatrix& h);

/// h^2 = (kappa + 1) phi^2.
AxiomReport h_squared_check(const ParacontactData& s, const PolyMatrix& h, const Scalar& kappa);

struct ParaSasakianCurvature {
  AxiomReport report;   // "R(X,Y)xi = -(eta(Y)X - eta(X)Y)"
  bool h_nonzero = false;
};

ParaSasakianCurvature parasasakian_curvature_check(const ParacontactData& s,
                                                   const RiemannTensor& r, const PolyMatrix& h);

/// Everything downstream of a structure: h, connection, curvature.
struct CurvatureBundle {
  PolyMatrix h;
  Connection nabla;
  RiemannTensor r;
};

CurvatureBundle compute_curvature(const ParacontactData& s);

}  // namespace pcm
