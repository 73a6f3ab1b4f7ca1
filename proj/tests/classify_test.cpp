#include <gtest/gtest.h>

#include <cmath>

#include "pcm/catalog.hpp"
#include "pcm/classify.hpp"
#include "pcm/exact/linalg.hpp"
#include "pcm/exact/poly_text.hpp"
#include "support/random.hpp"

namespace pcm {
namespace {

Point pt(long x, long y, long z) { return {mpq_class(x), mpq_class(y), mpq_class(z)}; }

Eigen::MatrixXd metric_d(const ParacontactData& s) {
  const ConstMatrix& g = s.metric();
  Eigen::MatrixXd out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j).to_double();
  return out;
}

// Exact metric-and-h search over small integer vectors in frame components.
std::vector<std::vector<long>> isotropic_unit_pairs(const ConstMatrix& g, const ConstMatrix& h) {
  std::vector<std::vector<long>> found;
  const std::size_t d = g.rows();
  std::vector<long> v(d, -2);
  const auto bil = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar acc;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) acc += a[i] * g(i, j) * b[j];
    return acc;
  };
  while (true) {
    std::vector<Scalar> x(d), hx(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = Scalar(v[i]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) hx[i] += h(i, j) * x[j];
    // eta = xi^* in every catalog frame; xi is the last r3 frame field.
    const bool horizontal = x[d - 1].is_zero();
    const Scalar gxy = bil(x, hx);
    if (horizontal && bil(x, x).is_zero() && (gxy == Scalar(1) || gxy == Scalar(-1)))
      found.push_back(v);
    std::size_t k = 0;
    while (k < d && v[k] == 2) v[k++] = -2;
    if (k == d) break;
    ++v[k];
  }
  return found;
}

TEST(RankStratification, R3) {
  const ParacontactData s = catalog::example_r3();
  const PolyMatrix h = compute_h(s);
  const std::vector<Point> samples{pt(0, 3, 4), pt(2, 0, 0)};
  const RankReport r = rank_stratification(h, samples);
  EXPECT_EQ(r.generic_rank, 1u);
  ASSERT_EQ(r.strata.size(), 1u);
  EXPECT_EQ(r.strata[0].max_rank, 0u);
  EXPECT_FALSE(r.strata[0].empty);
  ASSERT_EQ(r.strata[0].generators.size(), 1u);
  EXPECT_EQ(r.strata[0].generators[0], exact::parse_poly("x", s.frame().coordinates()));
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_EQ(r.samples[0].rank, 0u);
  EXPECT_EQ(r.samples[1].rank, 1u);
  EXPECT_EQ(stratum_of(r, pt(0, -5, 9)), &r.strata[0]);
  EXPECT_EQ(stratum_of(r, pt(1, 0, 0)), nullptr);
}

TEST(RankStratification, LieAlgebrasHaveConstantRank) {
  for (const auto& [n, m] : {std::pair{1, 1}, {2, 1}, {3, 2}, {3, 3}, {2, 0}}) {
    const RankReport r = rank_stratification(compute_h(catalog::example_lie(n, m)));
    EXPECT_EQ(r.generic_rank, static_cast<std::size_t>(m)) << n << "," << m;
    for (const Stratum& st : r.strata) EXPECT_TRUE(st.empty) << n << "," << m;
  }
}

TEST(RankStratification, ZeroMatrix) {
  const RankReport r = rank_stratification(PolyMatrix(3, 3));
  EXPECT_EQ(r.generic_rank, 0u);
  EXPECT_TRUE(r.strata.empty());
}

TEST(RankProperty, PointRankNeverExceedsGeneric) {
  const ParacontactData s = catalog::example_r3();
  const PolyMatrix h = compute_h(s);
  const RankReport r = rank_stratification(h);
  testing::Gen gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    Point p = gen.point(3);
    if (trial % 5 == 0) p[0] = 0;
    const std::size_t k = rank_at_point(h, p);
    EXPECT_LE(k, r.generic_rank);
    EXPECT_EQ(k == 0, p[0] == 0);
    EXPECT_EQ(stratum_of(r, p) != nullptr, p[0] == 0);
  }
}

TEST(HProperty, ImageInKernelAndRankBound) {
  for (const std::string& name : catalog::standard_names()) {
    const ParacontactData s = catalog::lookup(name);
    const PolyMatrix h = compute_h(s);
    EXPECT_TRUE((h * h).is_zero()) << name;
    EXPECT_LE(exact::poly_rank(h), s.n()) << name;
  }
  const PolyMatrix h = compute_h(catalog::example_lie(4, 4));
  EXPECT_TRUE((h * h).is_zero());
  EXPECT_EQ(exact::poly_rank(h), 4u);
}

TEST(CanonicalBasis, R3GenericPointMatchesExactSearch) {
  const ParacontactData s = catalog::example_r3();
  const Point p = pt(1, 0, 0);
  const CanonicalBasis cb = canonical_basis_at_point(s, p);
  ASSERT_EQ(cb.nonzero_blocks, 1u);
  ASSERT_EQ(cb.x.size(), 1u);
  EXPECT_EQ(cb.eps[0], 1);
  const auto candidates = isotropic_unit_pairs(s.metric(), evaluate(compute_h(s), p));
  // Only +-e1 is horizontal, null, and paired to its h-image with g = +-1.
  ASSERT_EQ(candidates.size(), 2u);
  bool matched = false;
  for (const auto& c : candidates) {
    Eigen::Vector3d v(c[0], c[1], c[2]);
    if ((cb.x[0] - v).norm() < 1e-9) matched = true;
  }
  EXPECT_TRUE(matched) << cb.x[0].transpose();
  EXPECT_NEAR((cb.xi - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-12);
  const CanonicalVerification v = verify_canonical(s, cb);
  EXPECT_TRUE(v.report.passed());
  EXPECT_LT(v.max_residual, 1e-9);
}

TEST(CanonicalBasis, R3DegeneratePlane) {
  const ParacontactData s = catalog::example_r3();
  const CanonicalBasis cb = canonical_basis_at_point(s, pt(0, 0, 0));
  EXPECT_EQ(cb.nonzero_blocks, 0u);
  ASSERT_EQ(cb.x.size(), 1u);
  const Eigen::MatrixXd g = metric_d(s);
  EXPECT_NEAR(cb.x[0].dot(g * cb.x[0]), 0.0, 1e-12);
  EXPECT_NEAR(cb.x[0].dot(g * cb.y[0]), cb.eps[0], 1e-12);
  EXPECT_TRUE(verify_canonical(s, cb).report.passed());
}

TEST(CanonicalBasis, LieAlgebra) {
  const ParacontactData s = catalog::example_lie(1, 1);
  const CanonicalBasis cb = canonical_basis_at_point(s, Point{});
  EXPECT_EQ(cb.nonzero_blocks, 1u);
  const CanonicalVerification v = verify_canonical(s, cb);
  EXPECT_TRUE(v.report.passed());
  EXPECT_TRUE(v.report.find("phi X_1 = +-X_1, phi Y_1 = -+Y_1")->pass);
}

TEST(VerifyCanonical, DetectsSwappedBlock) {
  const ParacontactData s = catalog::example_r3();
  CanonicalBasis cb = canonical_basis_at_point(s, pt(1, 0, 0));
  std::swap(cb.x[0], cb.y[0]);
  const CanonicalVerification v = verify_canonical(s, cb);
  EXPECT_FALSE(v.report.passed());
  EXPECT_FALSE(v.report.find("h blocks ((0,0),(1,0)) or zero")->pass);
}

TEST(VerifyCanonical, DetectsScaledVector) {
  const ParacontactData s = catalog::example_r3();
  CanonicalBasis cb = canonical_basis_at_point(s, pt(1, 0, 0));
  cb.x[0] *= 2.0;
  const CanonicalVerification v = verify_canonical(s, cb);
  EXPECT_FALSE(v.report.find("Gram: only g(xi,xi) = 1 and g(X_i,Y_i) = eps_i")->pass);
  EXPECT_GT(v.max_residual, 0.5);
}

TEST(CanonicalBasisProperty, RandomPointsOnAndOffThePlane) {
  const ParacontactData s = catalog::example_r3();
  const PolyMatrix h = compute_h(s);
  testing::Gen gen(42);
  for (int on_plane = 0; on_plane < 2; ++on_plane) {
    for (int trial = 0; trial < 20; ++trial) {
      Point p = gen.point(3);
      if (on_plane) {
        p[0] = 0;
      } else {
        while (p[0] == 0) p[0] = gen.rational();
      }
      const CanonicalBasis cb = canonical_basis_at_point(s, p);
      const CanonicalVerification v = verify_canonical(s, cb);
      EXPECT_TRUE(v.report.passed()) << p[0] << "," << p[1] << "," << p[2];
      EXPECT_LT(v.max_residual, 1e-9);
      EXPECT_EQ(cb.nonzero_blocks, rank_at_point(h, p));
    }
  }
}

TEST(CanonicalBasisProperty, CatalogLieAlgebras) {
  for (const auto& [n, m] : {std::pair{2, 1}, {2, 2}, {3, 2}, {3, 3}, {3, 0}}) {
    const ParacontactData s = catalog::example_lie(n, m);
    const CanonicalBasis cb = canonical_basis_at_point(s, Point{});
    EXPECT_EQ(cb.nonzero_blocks, static_cast<std::size_t>(m));
    EXPECT_EQ(cb.x.size(), static_cast<std::size_t>(n));
    const CanonicalVerification v = verify_canonical(s, cb);
    EXPECT_TRUE(v.report.passed()) << n << "," << m;
    EXPECT_LT(v.max_residual, 1e-9);
  }
}

TEST(CanonicalBasis, RejectsNonNilpotentH) {
  // h X = Y, h Y = X here, so h^2 is the identity on the contact distribution.
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
  try {
    canonical_basis_at_point(s, Point{});
    FAIL();
  } catch (const CanonicalError& e) {
    EXPECT_EQ(e.kind(), CanonicalError::Kind::kNotApplicable);
  }
}

}  // namespace
}  // namespace pcm
