#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "pcm/report.hpp"
#include "pcm/structure.hpp"

namespace pcm {

using Point = std::vector<mpq_class>;

/// Locus where rank h <= max_rank: the common zeros of `generators` (all
/// (max_rank+1)-minors, made monic and deduplicated). A nonzero constant
/// generator means the locus is empty.
struct Stratum {
  std::size_t max_rank = 0;
  std::vector<Poly> generators;
  bool empty = false;
};

struct PointRank {
  Point point;
  std::size_t rank = 0;
};

struct RankReport {
  std::size_t generic_rank = 0;
  std::vector<Stratum> strata;  // one per k < generic_rank
  std::vector<PointRank> samples;
};

ConstMatrix evaluate(const PolyMatrix& m, std::span<const mpq_class> point);
std::size_t rank_at_point(const PolyMatrix& m, std::span<const mpq_class> point);

RankReport rank_stratification(const PolyMatrix& h, std::span<const Point> points = {});

/// Stratum containing the point: the smallest-rank stratum whose generators
/// all vanish there, or nullptr when the point has generic rank.
const Stratum* stratum_of(const RankReport& report, std::span<const mpq_class> point);

class CanonicalError : public std::runtime_error {
 public:
  enum class Kind { kNotApplicable, kDegenerate };
  CanonicalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Basis {xi_p, X_1, Y_1, ..., X_n, Y_n} of T_pM in frame components, with
/// g(xi,xi) = 1, g(X_i,Y_i) = eps_i the only nonzero Gram entries, h X_i = Y_i
/// for the first `nonzero_blocks` indices and h = 0 on the other blocks.
struct CanonicalBasis {
  Point point;
  Eigen::VectorXd xi;
  std::vector<Eigen::VectorXd> x;
  std::vector<Eigen::VectorXd> y;
  std::vector<int> eps;
  std::size_t nonzero_blocks = 0;
  double residual = 0.0;
};

/// Floating-point construction at a rational point (ignored for Lie algebra
/// frames). Requires h_p^2 = 0; throws CanonicalError otherwise or when an
/// intermediate pivot falls below `tol`.
CanonicalBasis canonical_basis_at_point(const ParacontactData& s, std::span<const mpq_class> point,
                                        double tol = 1e-9);

struct CanonicalVerification {
  AxiomReport report;
  double max_residual = 0.0;
};

/// Rechecks every canonical-form condition from freshly evaluated g, h, eta,
/// phi and xi at cb.point.
CanonicalVerification verify_canonical(const ParacontactData& s, const CanonicalBasis& cb,
                                       double tol = 1e-9);

}  // namespace pcm
