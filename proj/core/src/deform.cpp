#include "pcm/deform.hpp"

namespace pcm {

ParacontactData dc_deform(const ParacontactData& s, const Scalar& c) {
  if (c.is_zero()) throw DeformError("c must be nonzero");
  const std::size_t n = s.dim();
  const Scalar c_inv = c.inverse();
  const Scalar cc1 = c * (c - Scalar(1));

  ConstMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly entry = Poly(c * s.metric()(i, j)) + s.eta()[i] * s.eta()[j] * cc1;
      if (!entry.is_constant()) {
        throw DeformError("deformed metric entry (" + s.frame().names()[i] + ", " +
                          s.frame().names()[j] + ") = " + entry.str() +
                          " is not constant in the frame");
      }
      g(i, j) = entry.constant_value();
    }

  FieldVec xi = s.xi() * Poly(c_inv);
  std::vector<Poly> eta = s.eta();
  for (auto& e : eta) e *= c;

  ParacontactData out(s.frame_ptr(), s.phi(), std::move(xi), std::move(eta), std::move(g));
  AxiomReport check = validate_almost_paracontact(out);
  check.append(validate_metric(out));
  for (const auto& ch : check.checks) {
    if (!ch.pass) {
      throw DeformError("deformed structure fails '" + ch.name + "': " + ch.witness);
    }
  }
  return out;
}

Scalar predicted_mu(const Scalar& mu, const Scalar& c) {
  if (c.is_zero()) throw DeformError("c must be nonzero");
  return (mu - Scalar(2) + Scalar(2) * c) / c;
}

AxiomReport deform_roundtrip_check(const ParacontactData& s, const Scalar& c) {
  AxiomReport report;
  const CurvatureBundle before = compute_curvature(s);
  const NullityVerdict v0 = nullity_infer(s, before.r, before.h);
  if (!v0.is_nullity_space() || !v0.kappa || *v0.kappa != Scalar(-1)) {
    report.fail("input is a (-1, mu)-space", v0.is_nullity_space() ? "kappa != -1" : v0.witness,
                v0.location);
    return report;
  }
  report.pass("input is a (-1, mu)-space");

  const ParacontactData deformed = dc_deform(s, c);
  report.pass("deformed structure revalidates");
  const CurvatureBundle after = compute_curvature(deformed);
  const NullityVerdict v1 = nullity_infer(deformed, after.r, after.h);
  if (!v1.is_nullity_space()) {
    report.fail("deformed is a (kappa, mu)-space", v1.witness, v1.location);
    return report;
  }
  report.pass("deformed is a (kappa, mu)-space");

  if (v1.kappa && *v1.kappa == Scalar(-1)) {
    report.pass("kappa' = -1");
  } else {
    report.fail("kappa' = -1", v1.kappa ? v1.kappa->str() : "free");
  }

  // h = 0 leaves mu undetermined on both sides.
  if (!v0.mu) {
    if (!v1.mu) {
      report.pass("mu' = (mu - 2 + 2c)/c");
    } else {
      report.fail("mu' = (mu - 2 + 2c)/c", "mu' determined as " + v1.mu->str());
    }
    return report;
  }
  const Scalar expected = predicted_mu(*v0.mu, c);
  if (v1.mu && *v1.mu == expected) {
    report.pass("mu' = (mu - 2 + 2c)/c");
  } else {
    report.fail("mu' = (mu - 2 + 2c)/c",
                "inferred " + (v1.mu ? v1.mu->str() : std::string("free")) + ", predicted " +
                    expected.str());
  }
  return report;
}

}  // namespace pcm
