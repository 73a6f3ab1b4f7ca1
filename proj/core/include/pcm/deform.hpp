#pragma once

#include <stdexcept>

#include "pcm/curvature.hpp"
#include "pcm/structure.hpp"

namespace pcm {

class DeformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// phi' = phi, xi' = xi / c, eta' = c eta, g' = c g + c(c-1) eta (x) eta.
///
/// Throws DeformError for c = 0, for a deformed metric that is not constant in
/// the frame, and when the result fails paracontact metric revalidation.
ParacontactData dc_deform(const ParacontactData& s, const Scalar& c);

/// mu' = (mu - 2 + 2c) / c.
Scalar predicted_mu(const Scalar& mu, const Scalar& c);

/// Deforms, recomputes h, the connection and curvature from scratch, infers
/// (kappa', mu') and compares against kappa' = -1 and mu' = predicted_mu.
AxiomReport deform_roundtrip_check(const ParacontactData& s, const Scalar& c);

}  // namespace pcm
