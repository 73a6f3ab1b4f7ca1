#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pcm/frame.hpp"
#include "pcm/report.hpp"

namespace pcm {

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (phi, xi, eta, g) expressed in a frame.
///
/// phi(k, j) is the E_k-component of phi(E_j); eta[j] = eta(E_j); g is the
/// constant Gram matrix g(E_i, E_j). Construction checks dimensions and that
/// g is symmetric and invertible; the paracontact axioms are checked by the
/// validate_* functions.
class ParacontactData {
 public:
  ParacontactData(FramePtr frame, PolyMatrix phi, FieldVec xi, std::vector<Poly> eta,
                  ConstMatrix metric);

  const FramePtr& frame_ptr() const { return frame_; }
  const FrameContext& frame() const { return *frame_; }
  std::size_t dim() const { return frame_->dim(); }
  /// Half of dim - 1.
  std::size_t n() const { return (dim() - 1) / 2; }

  const PolyMatrix& phi() const { return phi_; }
  const FieldVec& xi() const { return xi_; }
  const std::vector<Poly>& eta() const { return eta_; }
  const ConstMatrix& metric() const { return metric_; }
  const ConstMatrix& metric_inverse() const { return metric_inverse_; }

  FieldVec apply_phi(const FieldVec& v) const;
  Poly eta_of(const FieldVec& v) const;
  Poly metric_of(const FieldVec& u, const FieldVec& v) const;

 private:
  FramePtr frame_;
  PolyMatrix phi_;
  FieldVec xi_;
  std::vector<Poly> eta_;
  ConstMatrix metric_;
  ConstMatrix metric_inverse_;
};

/// Applies a matrix with columns phi(E_j) to frame components.
FieldVec apply_matrix(const PolyMatrix& m, const FieldVec& v);

/// phi^2 = I - eta (x) xi, eta(xi) = 1, and both +-1 eigendistributions of
/// phi on ker eta have rank n.
AxiomReport validate_almost_paracontact(const ParacontactData& s);

/// Compatibility g(phi X, phi Y) = -g(X,Y) + eta(X)eta(Y), d eta = g(., phi .),
/// and signature (n+1, n).
AxiomReport validate_metric(const ParacontactData& s);

/// d eta(E_i, E_j) = 1/2 (E_i eta_j - E_j eta_i - eta([E_i, E_j])).
Poly d_eta(const ParacontactData& s, std::size_t i, std::size_t j);

/// h = 1/2 L_xi phi, with (L_xi phi) X = [xi, phi X] - phi [xi, X].
PolyMatrix compute_h(const ParacontactData& s);

/// g-symmetry, h phi = -phi h, h xi = 0 and tr h = 0.
AxiomReport h_properties(const ParacontactData& s, const PolyMatrix& h);
AxiomReport h_properties(const ParacontactData& s);

/// [phi,phi](X,Y) - 2 d eta(X,Y) xi on all frame pairs. The report holds a
/// "normal" check and a "paraSasakian" check (normal and paracontact metric).
AxiomReport nijenhuis_normality(const ParacontactData& s);

/// The normality tensor on a frame pair.
FieldVec normality_tensor(const ParacontactData& s, std::size_t i, std::size_t j);

/// True iff h vanishes identically (xi is Killing).
bool is_k_paracontact(const ParacontactData& s);

/// First nonzero entry of m, rendered as a witness. Used by matrix identity checks.
void check_zero_matrix(AxiomReport& report, const std::string& name, const PolyMatrix& m,
                       const std::vector<std::string>& names);

}  // namespace pcm
