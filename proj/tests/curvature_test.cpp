#include <gtest/gtest.h>

#include "pcm/catalog.hpp"
#include "pcm/curvature.hpp"
#include "pcm/exact/poly_text.hpp"

namespace pcm {
namespace {

std::vector<ParacontactData> all_catalog() {
  std::vector<ParacontactData> out;
  for (const std::string& name : catalog::standard_names()) out.push_back(catalog::lookup(name));
  return out;
}

std::string R(const ParacontactData& s, const FieldVec& v) { return render(v, s.frame().names()); }

// Abelian Lie algebra of dimension 3 with a constant, otherwise arbitrary metric.
ParacontactData abelian() {
  StructureConstants c(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  auto f = LieFrame::create({"xi", "X", "Y"}, c);
  const ParacontactData base = catalog::example_lie(1, 1);
  return ParacontactData(f, base.phi(), base.xi(), base.eta(), base.metric());
}

// Oracle for left-invariant metrics: with g constant the Koszul formula reduces to
// 2 g(nabla_i E_j, E_k) = g([E_i,E_j],E_k) - g([E_j,E_k],E_i) + g([E_k,E_i],E_j).
FieldVec lie_nabla(const ParacontactData& s, const StructureConstants& c, std::size_t i,
                   std::size_t j) {
  const std::size_t n = s.dim();
  const ConstMatrix& g = s.metric();
  const auto gb = [&](std::size_t a, std::size_t b, std::size_t k) {
    Scalar v(0);
    for (std::size_t l = 0; l < n; ++l) v += c[a][b][l] * g(l, k);
    return v;
  };
  std::vector<Scalar> lowered(n);
  for (std::size_t k = 0; k < n; ++k)
    lowered[k] = (gb(i, j, k) - gb(j, k, i) + gb(k, i, j)) * Scalar(mpq_class(1, 2));
  FieldVec out(n);
  for (std::size_t l = 0; l < n; ++l) {
    Scalar v(0);
    for (std::size_t k = 0; k < n; ++k) v += s.metric_inverse()(l, k) * lowered[k];
    out[l] = Poly(v);
  }
  return out;
}

TEST(LeviCivita, AbelianIsFlat) {
  const ParacontactData s = abelian();
  const Connection nabla = levi_civita(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(nabla(i, j).is_zero());
  EXPECT_TRUE(check_connection(s, nabla).passed());
  const RiemannTensor r = riemann(s, nabla);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(r(i, j, k).is_zero());
}

TEST(LeviCivita, R3HandKoszul) {
  // 2g(nabla_e1 xi, Z) = g([e1,xi],Z) - g([e1,Z],xi) - g([xi,Z],e1) gives
  // g(., e1) = -x, g(., e2) = -1, g(., xi) = 0, so nabla_e1 xi = -e1 - x e2.
  const ParacontactData s = catalog::example_r3();
  const Connection nabla = levi_civita(s);
  EXPECT_EQ(R(s, nabla(0, 2)), "-e1 - x*e2");
  EXPECT_EQ(R(s, nabla(1, 2)), "e2");
  EXPECT_EQ(R(s, nabla(2, 2)), "0");
}

TEST(LeviCivita, LieFamilyHandKoszul) {
  // Brackets [xi,X1] = Y1, [X1,Y1] = 2 xi + 2 sqrt2 Y1: 2g(nabla_xi X1, Y1) = -2, all other
  // pairings vanish, so nabla_xi X1 = -X1.
  const ParacontactData s = catalog::example_lie(1, 1);
  const Connection nabla = levi_civita(s);
  EXPECT_EQ(R(s, nabla(0, 1)), "-X1");
  EXPECT_EQ(R(s, nabla(1, 0)), "-X1 - Y1");
  EXPECT_EQ(R(s, nabla(2, 0)), "Y1");
}

TEST(LeviCivita, MatchesStructureConstantFormula) {
  for (const std::string& name : catalog::standard_names()) {
    const ParacontactData s = catalog::lookup(name);
    const auto* lie = dynamic_cast<const LieFrame*>(&s.frame());
    if (!lie) continue;
    const Connection nabla = levi_civita(s);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        EXPECT_EQ(nabla(i, j), lie_nabla(s, lie->constants(), i, j)) << name << " " << i << j;
  }
}

TEST(LeviCivita, NablaXiIsMinusPhiPlusPhiH) {
  // nabla_X xi = -phi X + phi h X holds on every paracontact metric manifold.
  for (const ParacontactData& s : all_catalog()) {
    const CurvatureBundle b = compute_curvature(s);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const FieldVec e = FieldVec::basis(s.dim(), i);
      const FieldVec expected = -s.apply_phi(e) + s.apply_phi(apply_matrix(b.h, e));
      EXPECT_EQ(covariant_derivative(s.frame(), b.nabla, i, s.xi()), expected);
    }
  }
}

TEST(CheckConnection, CatalogPasses) {
  for (const ParacontactData& s : all_catalog()) {
    const AxiomReport r = check_connection(s, levi_civita(s));
    EXPECT_TRUE(r.passed());
    EXPECT_NE(r.find("torsion = 0"), nullptr);
    EXPECT_NE(r.find("nabla g = 0"), nullptr);
  }
}

TEST(CheckConnection, CorruptedChristoffelFailsTorsion) {
  const ParacontactData s = catalog::example_r3();
  Connection nabla = levi_civita(s);
  nabla(0, 1)[2] += Poly(1);
  const AxiomReport r = check_connection(s, nabla);
  const Check* torsion = r.find("torsion = 0");
  ASSERT_NE(torsion, nullptr);
  EXPECT_FALSE(torsion->pass);
  EXPECT_EQ(torsion->witness, "xi");
}

TEST(Riemann, R3XiXi) {
  const ParacontactData s = catalog::example_r3();
  const CurvatureBundle b = compute_curvature(s);
  // kappa = -1, mu = 2 with Y = xi: R(e1, xi) xi = -e1 + 2 h e1 = -e1 + 2x e2.
  EXPECT_EQ(R(s, b.r(0, 2, 2)), "-e1 + 2*x*e2");
  EXPECT_EQ(R(s, b.r(1, 2, 2)), "-e2");
}

TEST(Riemann, LieFamilyXiXi) {
  const ParacontactData s = catalog::example_lie(1, 1);
  const CurvatureBundle b = compute_curvature(s);
  EXPECT_EQ(R(s, b.r(1, 0, 0)), "-X1 + 2*Y1");
  EXPECT_EQ(R(s, b.r(2, 0, 0)), "-Y1");
}

TEST(Riemann, ApplyIsMultilinear) {
  const ParacontactData s = catalog::example_r3();
  const CurvatureBundle b = compute_curvature(s);
  const VarList& v = s.frame().coordinates();
  const FieldVec x = exact::parse_poly("y", v) * FieldVec::basis(3, 0) + FieldVec::basis(3, 1);
  const FieldVec xi = s.xi();
  EXPECT_EQ(b.r.apply(x, xi, xi),
            exact::parse_poly("y", v) * b.r(0, 2, 2) + b.r(1, 2, 2));
}

TEST(CurvatureIdentities, CatalogPasses) {
  for (const ParacontactData& s : all_catalog()) {
    const CurvatureBundle b = compute_curvature(s);
    const AxiomReport r = curvature_identities(s, b.r);
    EXPECT_TRUE(r.passed());
    EXPECT_NE(r.find("first Bianchi identity"), nullptr);
  }
}

TEST(CurvatureIdentities, DetectBrokenTensor) {
  const ParacontactData s = catalog::example_r3();
  RiemannTensor r = compute_curvature(s).r;
  r(0, 1, 2)[0] += Poly(1);
  EXPECT_FALSE(curvature_identities(s, r).passed());
}

TEST(NullityVerify, Examples) {
  const ParacontactData r3 = catalog::example_r3();
  const CurvatureBundle b = compute_curvature(r3);
  EXPECT_TRUE(nullity_verify(r3, b.r, b.h, Scalar(-1), Scalar(2)).passed());
  const AxiomReport wrong = nullity_verify(r3, b.r, b.h, Scalar(-1), Scalar(0));
  ASSERT_FALSE(wrong.passed());
  // The two residuals differ by 2 (eta(Y) hX - eta(X) hY): at (e1, xi) that is 2x e2.
  EXPECT_EQ(wrong.checks.back().witness, "2*x*e2");
  EXPECT_EQ(wrong.checks.back().location, "(e1, xi)");

  const ParacontactData lie = catalog::example_lie(2, 1);
  const CurvatureBundle bl = compute_curvature(lie);
  EXPECT_TRUE(nullity_verify(lie, bl.r, bl.h, Scalar(-1), Scalar(2)).passed());
}

TEST(NullityInfer, Constants) {
  for (const std::string& name : {"r3", "lie:n=2,m=2", "lie:n=1,m=1", "lie:n=3,m=2"}) {
    const ParacontactData s = catalog::lookup(name);
    const CurvatureBundle b = compute_curvature(s);
    const NullityVerdict v = nullity_infer(s, b.r, b.h);
    ASSERT_EQ(v.kind, NullityVerdict::Kind::kConstants) << name;
    EXPECT_EQ(*v.kappa, Scalar(-1)) << name;
    EXPECT_EQ(*v.mu, Scalar(2)) << name;
  }
  const ParacontactData mu0 = catalog::example_lie_mu0();
  const CurvatureBundle b = compute_curvature(mu0);
  const NullityVerdict v = nullity_infer(mu0, b.r, b.h);
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kConstants);
  EXPECT_EQ(*v.kappa, Scalar(-1));
  EXPECT_EQ(*v.mu, Scalar(0));
}

TEST(NullityInfer, FlatAbelianIsAFamily) {
  const ParacontactData s = abelian();
  const CurvatureBundle b = compute_curvature(s);
  const NullityVerdict v = nullity_infer(s, b.r, b.h);
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kFamily);
  ASSERT_TRUE(v.kappa.has_value());
  EXPECT_EQ(*v.kappa, Scalar(0));
  EXPECT_FALSE(v.mu.has_value());
}

TEST(NullityInfer, KParacontactVariantIsAFamily) {
  const ParacontactData s = catalog::example_lie(2, 0);
  const CurvatureBundle b = compute_curvature(s);
  const NullityVerdict v = nullity_infer(s, b.r, b.h);
  ASSERT_EQ(v.kind, NullityVerdict::Kind::kFamily);
  EXPECT_EQ(*v.kappa, Scalar(-1));
  EXPECT_FALSE(v.mu.has_value());
}

TEST(NullityInfer, NonNullityStructureIsRejected) {
  // [xi, X] = X + Y, [xi, Y] = -X - Y, [X, Y] = 2 xi + X + Y: a paracontact metric
  // Lie algebra whose R(X, xi)xi fits the nullity form while R(X, Y)xi does not.
  StructureConstants c(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, Scalar v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  };
  set(0, 1, 1, 1);
  set(0, 1, 2, 1);
  set(0, 2, 1, -1);
  set(0, 2, 2, -1);
  set(1, 2, 0, 2);
  set(1, 2, 1, 1);
  set(1, 2, 2, 1);
  const ParacontactData base = catalog::example_lie(1, 1);
  const ParacontactData s(LieFrame::create({"xi", "X", "Y"}, c), base.phi(), base.xi(),
                          base.eta(), base.metric());
  ASSERT_TRUE(validate_almost_paracontact(s).passed());
  ASSERT_TRUE(validate_metric(s).passed());
  const CurvatureBundle b = compute_curvature(s);
  const NullityVerdict v = nullity_infer(s, b.r, b.h);
  EXPECT_EQ(v.kind, NullityVerdict::Kind::kNone);
  EXPECT_FALSE(v.witness.empty());
  EXPECT_EQ(v.location, "(X, Y)");
}

TEST(NullityProperty, InferThenVerifyIsIdempotent) {
  for (const ParacontactData& s : all_catalog()) {
    const CurvatureBundle b = compute_curvature(s);
    const NullityVerdict v = nullity_infer(s, b.r, b.h);
    if (v.kind != NullityVerdict::Kind::kConstants) continue;
    EXPECT_TRUE(nullity_verify(s, b.r, b.h, *v.kappa, *v.mu).passed());
    const NullityVerdict again = nullity_infer(s, b.r, b.h);
    EXPECT_EQ(*again.kappa, *v.kappa);
    EXPECT_EQ(*again.mu, *v.mu);
  }
}

TEST(HSquared, NilpotentOnMinusOneSpaces) {
  for (const ParacontactData& s : all_catalog()) {
    const CurvatureBundle b = compute_curvature(s);
    EXPECT_TRUE(h_squared_check(s, b.h, Scalar(-1)).passed());
    EXPECT_TRUE((b.h * b.h).is_zero());
  }
}

TEST(HSquared, FlatCaseIsANegativeControl) {
  const ParacontactData s = abelian();
  const CurvatureBundle b = compute_curvature(s);
  // h = 0 but (kappa + 1) phi^2 = phi^2 != 0 at kappa = 0.
  EXPECT_FALSE(h_squared_check(s, b.h, Scalar(0)).passed());
}

TEST(ParaSasakianCurvature, Examples) {
  const ParacontactData r3 = catalog::example_r3();
  const CurvatureBundle b = compute_curvature(r3);
  const ParaSasakianCurvature ex2 = parasasakian_curvature_check(r3, b.r, b.h);
  EXPECT_FALSE(ex2.report.passed());
  EXPECT_TRUE(ex2.h_nonzero);
  // Witness is the dropped mu term 2(eta(Y)hX - eta(X)hY) at (e1, xi).
  EXPECT_EQ(ex2.report.checks.front().witness, "2*x*e2");

  const ParacontactData ps = catalog::example_lie(1, 0);
  const CurvatureBundle bp = compute_curvature(ps);
  const ParaSasakianCurvature k = parasasakian_curvature_check(ps, bp.r, bp.h);
  EXPECT_TRUE(k.report.passed());
  EXPECT_FALSE(k.h_nonzero);

  const ParacontactData mu0 = catalog::example_lie_mu0();
  const CurvatureBundle bm = compute_curvature(mu0);
  const ParaSasakianCurvature m = parasasakian_curvature_check(mu0, bm.r, bm.h);
  EXPECT_TRUE(m.report.passed());
  EXPECT_TRUE(m.h_nonzero);
}

}  // namespace
}  // namespace pcm
