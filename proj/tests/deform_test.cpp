#include <gtest/gtest.h>

#include "pcm/catalog.hpp"
#include "pcm/deform.hpp"
#include "support/random.hpp"

namespace pcm {
namespace {

NullityVerdict infer(const ParacontactData& s) {
  const CurvatureBundle b = compute_curvature(s);
  return nullity_infer(s, b.r, b.h);
}

void expect_same_structure(const ParacontactData& a, const ParacontactData& b) {
  EXPECT_EQ(a.phi(), b.phi());
  EXPECT_EQ(a.xi(), b.xi());
  EXPECT_EQ(a.eta(), b.eta());
  EXPECT_EQ(a.metric(), b.metric());
}

// (-1, 4)-space: the (-1, 0) seed deformed by c = -1.
ParacontactData minus_one_four() { return dc_deform(catalog::example_lie_mu0(), Scalar(-1)); }

TEST(DcDeform, IdentityAtOne) {
  const ParacontactData s = catalog::example_r3();
  expect_same_structure(dc_deform(s, Scalar(1)), s);
}

TEST(DcDeform, FormulaComponents) {
  const ParacontactData s = catalog::example_lie(1, 1);
  const Scalar c(3);
  const ParacontactData d = dc_deform(s, c);
  EXPECT_EQ(d.phi(), s.phi());
  EXPECT_EQ(d.xi()[0], Poly(Scalar(mpq_class(1, 3))));
  EXPECT_EQ(d.eta()[0], Poly(3));
  // g' = 3 g + 6 eta (x) eta: g'(xi, xi) = 3 + 6 = 9, g'(X1, Y1) = 3.
  EXPECT_EQ(d.metric()(0, 0), Scalar(9));
  EXPECT_EQ(d.metric()(1, 2), Scalar(3));
  EXPECT_EQ(d.metric()(1, 1), Scalar(0));
}

TEST(DcDeform, InverseDeformationRestores) {
  for (const ParacontactData& s : {catalog::example_r3(), catalog::example_lie(2, 1)}) {
    for (const Scalar& c : {Scalar(2), Scalar(mpq_class(1, 2)), Scalar(-1), Scalar(3)}) {
      expect_same_structure(dc_deform(dc_deform(s, c), c.inverse()), s);
    }
  }
}

TEST(DcDeform, R3StaysMinusOneTwo) {
  const ParacontactData d = dc_deform(catalog::example_r3(), Scalar(2));
  EXPECT_TRUE(validate_almost_paracontact(d).passed());
  EXPECT_TRUE(validate_metric(d).passed());
  const NullityVerdict v = infer(d);
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kConstants);
  EXPECT_EQ(*v.kappa, Scalar(-1));
  EXPECT_EQ(*v.mu, Scalar(2));
}

TEST(DcDeform, Rejections) {
  const ParacontactData r3 = catalog::example_r3();
  try {
    dc_deform(r3, Scalar(0));
    FAIL();
  } catch (const DeformError& e) {
    EXPECT_STREQ(e.what(), "c must be nonzero");
  }
  // r3 at c = 1 - mu/2 with mu = 2 is the excluded c = 0.
  EXPECT_THROW(dc_deform(r3, Scalar(1) - Scalar(2) / Scalar(2)),
               DeformError);
  // eta with a chart-dependent component makes g' non-constant.
  const VarList& v = r3.frame().coordinates();
  std::vector<Poly> eta = r3.eta();
  eta[0] = Poly::variable(v, "x");
  const ParacontactData tilted(r3.frame_ptr(), r3.phi(), r3.xi(), eta, r3.metric());
  EXPECT_THROW(dc_deform(tilted, Scalar(2)), DeformError);
}

TEST(PredictedMu, Examples) {
  for (const Scalar& c : {Scalar(2), Scalar(mpq_class(1, 2)), Scalar(-1), Scalar(3)})
    EXPECT_EQ(predicted_mu(Scalar(2), c), Scalar(2));
  for (long mu : {-2, 1, 4, 7}) {
    const Scalar m(mu);
    EXPECT_EQ(predicted_mu(Scalar(0), Scalar(2) / (Scalar(2) - m)), m);
  }
  for (long mu : {-2, 1, 4, 3}) {
    const Scalar m(mu);
    EXPECT_EQ(predicted_mu(m, Scalar(1) - m / Scalar(2)), Scalar(0));
  }
  EXPECT_THROW(predicted_mu(Scalar(1), Scalar(0)), DeformError);
}

TEST(PredictedMuProperty, CompositionLaw) {
  testing::Gen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar mu = gen.scalar();
    const Scalar c1 = gen.nonzero_scalar();
    const Scalar c2 = gen.nonzero_scalar();
    EXPECT_EQ(predicted_mu(predicted_mu(mu, c1), c2), predicted_mu(mu, c1 * c2));
  }
}

TEST(DeformRoundtrip, LieFamilyInvariantMu) {
  const ParacontactData s = catalog::example_lie(1, 1);
  for (const Scalar& c : {Scalar(2), Scalar(mpq_class(1, 2)), Scalar(-1), Scalar(3)}) {
    const AxiomReport r = deform_roundtrip_check(s, c);
    EXPECT_TRUE(r.passed()) << c.str();
    EXPECT_EQ(*infer(dc_deform(s, c)).mu, Scalar(2));
  }
}

TEST(DeformRoundtrip, SeedToMinusOneFour) {
  const ParacontactData seed = catalog::example_lie_mu0();
  // c = 2/(2 - 4) = -1 takes mu = 0 to 4.
  const Scalar c = Scalar(2) / (Scalar(2) - Scalar(4));
  EXPECT_EQ(c, Scalar(-1));
  EXPECT_TRUE(deform_roundtrip_check(seed, c).passed());
  const NullityVerdict v = infer(dc_deform(seed, c));
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kConstants);
  EXPECT_EQ(*v.kappa, Scalar(-1));
  EXPECT_EQ(*v.mu, Scalar(4));
}

TEST(DeformRoundtrip, BackToMinusOneZero) {
  const ParacontactData m4 = minus_one_four();
  const Scalar c = Scalar(1) - Scalar(4) / Scalar(2);
  const ParacontactData back = dc_deform(m4, c);
  const NullityVerdict v = infer(back);
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kConstants);
  EXPECT_EQ(*v.mu, Scalar(0));
  const CurvatureBundle b = compute_curvature(back);
  EXPECT_TRUE(parasasakian_curvature_check(back, b.r, b.h).report.passed());
  EXPECT_FALSE(b.h.is_zero());
}

TEST(DeformRoundtrip, IrrationalFactor) {
  const ParacontactData seed = catalog::example_lie_mu0();
  const Scalar c = Scalar::sqrt_of(2);
  EXPECT_TRUE(deform_roundtrip_check(seed, c).passed());
  EXPECT_EQ(*infer(dc_deform(seed, c)).mu, predicted_mu(Scalar(0), c));
}

TEST(DeformRoundtrip, KParacontactFamilyInput) {
  const ParacontactData k = catalog::example_lie(1, 0);
  // kappa = -1 with mu free: the mu law is vacuous, the check still runs.
  const AxiomReport r = deform_roundtrip_check(k, Scalar(2));
  EXPECT_TRUE(r.find("input is a (-1, mu)-space")->pass);
}

TEST(DeformProperty, DeformedStructuresRevalidate) {
  testing::Gen gen(32);
  for (const std::string& name : catalog::standard_names()) {
    const ParacontactData s = catalog::lookup(name);
    for (int k = 0; k < 2; ++k) {
      const Scalar c = gen.nonzero_scalar();
      const ParacontactData d = dc_deform(s, c);
      EXPECT_TRUE(validate_almost_paracontact(d).passed()) << name << " " << c.str();
      EXPECT_TRUE(validate_metric(d).passed()) << name << " " << c.str();
    }
  }
}

}  // namespace
}  // namespace pcm
