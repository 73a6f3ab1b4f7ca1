#include "pcm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pcm/exact/linalg.hpp"

namespace pcm {

ConstMatrix evaluate(const PolyMatrix& m, std::span<const mpq_class> point) {
  ConstMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Poly& p = m(r, c);
      out(r, c) = p.nvars() == 0 ? p.constant_value() : p.eval(point);
    }
  return out;
}

std::size_t rank_at_point(const PolyMatrix& m, std::span<const mpq_class> point) {
  return exact::rank(evaluate(m, point));
}

RankReport rank_stratification(const PolyMatrix& h, std::span<const Point> points) {
  RankReport report;
  report.generic_rank = exact::poly_rank(h);
  for (std::size_t k = 0; k < report.generic_rank; ++k) {
    Stratum st;
    st.max_rank = k;
    for (const Poly& minor : exact::minors(h, k + 1, true)) {
      if (minor.is_constant()) {
        st.empty = true;
        st.generators = {Poly(1)};
        break;
      }
      const Poly g = minor.monic();
      if (std::find(st.generators.begin(), st.generators.end(), g) == st.generators.end()) {
        st.generators.push_back(g);
      }
    }
    report.strata.push_back(std::move(st));
  }
  for (const Point& p : points) report.samples.push_back({p, rank_at_point(h, p)});
  return report;
}

const Stratum* stratum_of(const RankReport& report, std::span<const mpq_class> point) {
  for (const Stratum& st : report.strata) {
    if (st.empty) continue;
    const bool vanish = std::all_of(st.generators.begin(), st.generators.end(), [&](const Poly& g) {
      return (g.nvars() == 0 ? g.constant_value() : g.eval(point)).is_zero();
    });
    if (vanish) return &st;
  }
  return nullptr;
}

namespace {

struct NumericData {
  Eigen::MatrixXd g;
  Eigen::MatrixXd h;
  Eigen::MatrixXd phi;
  Eigen::VectorXd eta;
  Eigen::VectorXd xi;
  ConstMatrix h_exact;
};

Eigen::MatrixXd to_eigen(const ConstMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
  return out;
}

Scalar eval_poly(const Poly& p, std::span<const mpq_class> point) {
  return p.nvars() == 0 ? p.constant_value() : p.eval(point);
}

NumericData evaluate_structure(const ParacontactData& s, std::span<const mpq_class> point) {
  const VarList& coords = s.frame().coordinates();
  const std::size_t nvars = coords ? coords->size() : 0;
  if (point.size() != nvars) {
    throw CanonicalError(CanonicalError::Kind::kNotApplicable,
                         "point has " + std::to_string(point.size()) + " coordinates, chart has " +
                             std::to_string(nvars));
  }
  NumericData d;
  const std::size_t n = s.dim();
  d.h_exact = evaluate(compute_h(s), point);
  d.g = to_eigen(s.metric());
  d.h = to_eigen(d.h_exact);
  d.phi = to_eigen(evaluate(s.phi(), point));
  d.eta.resize(static_cast<Eigen::Index>(n));
  d.xi.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.eta(static_cast<Eigen::Index>(i)) = eval_poly(s.eta()[i], point).to_double();
    d.xi(static_cast<Eigen::Index>(i)) = eval_poly(s.xi()[i], point).to_double();
  }
  return d;
}

// Columns spanning the null space of `constraints` (orthonormal, Euclidean).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& constraints, Eigen::Index expected_rank,
                           double tol) {
  const Eigen::Index cols = constraints.cols();
  if (constraints.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  if (r != expected_rank) {
    throw CanonicalError(CanonicalError::Kind::kDegenerate,
                         "degenerate input: constraint rank " + std::to_string(r) + ", expected " +
                             std::to_string(expected_rank));
  }
  return svd.matrixV().rightCols(cols - r);
}

}  // namespace

CanonicalBasis canonical_basis_at_point(const ParacontactData& s, std::span<const mpq_class> point,
                                        double tol) {
  const std::size_t n = s.n();
  const NumericData d = evaluate_structure(s, point);

  if (!(d.h_exact * d.h_exact).is_zero()) {
    throw CanonicalError(CanonicalError::Kind::kNotApplicable,
                         "not applicable: not a (-1, mu)-point (h_p^2 != 0)");
  }
  const std::size_t m = exact::rank(d.h_exact);

  CanonicalBasis cb;
  cb.point.assign(point.begin(), point.end());
  cb.xi = d.xi;
  cb.nonzero_blocks = m;

  // Orthonormal (Euclidean) basis of D_p = ker eta_p.
  const Eigen::Index dim = d.g.rows();
  const Eigen::MatrixXd dbasis = null_space(d.eta.transpose(), 1, tol);
  if (std::abs(d.eta.dot(d.xi) - 1.0) > tol) {
    throw CanonicalError(CanonicalError::Kind::kDegenerate, "degenerate input: eta(xi) != 1");
  }

  // b(U, V) = g(U, hV) restricted to D_p; X_i from its nonzero eigenvectors.
  if (m > 0) {
    Eigen::MatrixXd b = dbasis.transpose() * d.g * d.h * dbasis;
    b = 0.5 * (b + b.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(b.rows()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index c) {
      return std::abs(es.eigenvalues()(a)) > std::abs(es.eigenvalues()(c));
    });
    for (std::size_t i = 0; i < m; ++i) {
      const double lambda = es.eigenvalues()(order[i]);
      if (std::abs(lambda) < tol) {
        throw CanonicalError(CanonicalError::Kind::kDegenerate,
                             "degenerate input: g(., h.) pivot below tolerance");
      }
      cb.x.push_back(dbasis * es.eigenvectors().col(order[i]) / std::sqrt(std::abs(lambda)));
      cb.eps.push_back(lambda > 0 ? 1 : -1);
    }
    for (std::size_t i = 0; i < m; ++i) cb.y.push_back(d.h * cb.x[i]);
    // Make the X_i mutually null: X_i -= 1/2 sum_k eps_k g(X_i, X_k) Y_k.
    std::vector<Eigen::VectorXd> adjusted = cb.x;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        adjusted[i] -= 0.5 * cb.eps[k] * cb.x[i].dot(d.g * cb.x[k]) * cb.y[k];
    cb.x = std::move(adjusted);
  }

  // Zero blocks: hyperbolic pairs in the g-orthocomplement of the nonzero blocks inside D_p.
  const std::size_t k = n - m;
  if (k > 0) {
    Eigen::MatrixXd constraints(static_cast<Eigen::Index>(2 * m + 1), dim);
    for (std::size_t i = 0; i < m; ++i) {
      constraints.row(static_cast<Eigen::Index>(2 * i)) = (d.g * cb.x[i]).transpose();
      constraints.row(static_cast<Eigen::Index>(2 * i + 1)) = (d.g * cb.y[i]).transpose();
    }
    constraints.row(static_cast<Eigen::Index>(2 * m)) = d.eta.transpose();
    const Eigen::MatrixXd comp =
        null_space(constraints, static_cast<Eigen::Index>(2 * m + 1), tol);
    Eigen::MatrixXd gram = comp.transpose() * d.g * comp;
    gram = 0.5 * (gram + gram.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    std::vector<Eigen::VectorXd> plus;
    std::vector<Eigen::VectorXd> minus;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      const double lambda = es.eigenvalues()(i);
      if (std::abs(lambda) < tol) {
        throw CanonicalError(CanonicalError::Kind::kDegenerate,
                             "degenerate input: complement Gram pivot below tolerance");
      }
      Eigen::VectorXd v = comp * es.eigenvectors().col(i) / std::sqrt(std::abs(lambda));
      (lambda > 0 ? plus : minus).push_back(std::move(v));
    }
    if (plus.size() != k || minus.size() != k) {
      throw CanonicalError(CanonicalError::Kind::kDegenerate,
                           "degenerate input: complement is not neutral");
    }
    const double r2 = std::sqrt(0.5);
    for (std::size_t i = 0; i < k; ++i) {
      cb.x.push_back(r2 * (plus[i] + minus[i]));
      cb.y.push_back(r2 * (plus[i] - minus[i]));
      cb.eps.push_back(1);
    }
  }

  cb.residual = verify_canonical(s, cb, tol).max_residual;
  return cb;
}

CanonicalVerification verify_canonical(const ParacontactData& s, const CanonicalBasis& cb,
                                       double tol) {
  CanonicalVerification out;
  const std::size_t n = s.n();
  const NumericData d = evaluate_structure(s, cb.point);
  const Eigen::Index dim = d.g.rows();

  auto record = [&](const std::string& name, double residual) {
    out.max_residual = std::max(out.max_residual, residual);
    if (residual < tol) {
      out.report.pass(name);
    } else {
      out.report.fail(name, "residual " + std::to_string(residual));
    }
  };
  auto shape_fail = [&](const std::string& why) {
    out.report.fail("basis shape", why);
    out.max_residual = std::numeric_limits<double>::infinity();
    return out;
  };

  if (cb.x.size() != n || cb.y.size() != n || cb.eps.size() != n || cb.nonzero_blocks > n ||
      cb.xi.size() != dim) {
    return shape_fail("expected " + std::to_string(n) + " blocks");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cb.x[i].size() != dim || cb.y[i].size() != dim) return shape_fail("vector length");
  out.report.pass("basis shape");

  record("xi_p = xi(p)", (cb.xi - d.xi).lpNorm<Eigen::Infinity>());

  double eta_res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    eta_res = std::max({eta_res, std::abs(d.eta.dot(cb.x[i])), std::abs(d.eta.dot(cb.y[i]))});
  record("eta(X_i) = eta(Y_i) = 0", eta_res);

  Eigen::MatrixXd basis(dim, dim);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(dim, dim);
  basis.col(0) = cb.xi;
  expected(0, 0) = 1.0;
  double eps_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Eigen::Index>(2 * i + 1);
    basis.col(a) = cb.x[i];
    basis.col(a + 1) = cb.y[i];
    expected(a, a + 1) = expected(a + 1, a) = cb.eps[i];
    if (cb.eps[i] != 1 && cb.eps[i] != -1) eps_res = 1.0;
  }
  record("eps_i = +-1", eps_res);
  const Eigen::MatrixXd gram = basis.transpose() * d.g * basis;
  record("Gram: only g(xi,xi) = 1 and g(X_i,Y_i) = eps_i", (gram - expected).lpNorm<Eigen::Infinity>());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gram + gram.transpose()));
  std::size_t pos = 0;
  std::size_t neg = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (es.eigenvalues()(i) > tol) ++pos;
    if (es.eigenvalues()(i) < -tol) ++neg;
  }
  record("Gram inertia (n+1, n)", (pos == n + 1 && neg == n) ? 0.0 : 1.0);

  double h_res = (d.h * cb.xi).lpNorm<Eigen::Infinity>();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd hx = d.h * cb.x[i];
    h_res = std::max(h_res, (i < cb.nonzero_blocks ? (hx - cb.y[i]) : hx).lpNorm<Eigen::Infinity>());
    h_res = std::max(h_res, (d.h * cb.y[i]).lpNorm<Eigen::Infinity>());
  }
  record("h blocks ((0,0),(1,0)) or zero", h_res);

  const std::size_t exact_rank = exact::rank(d.h_exact);
  record("block count = rank h_p", cb.nonzero_blocks == exact_rank ? 0.0 : 1.0);

  if (n == 1) {
    double best = std::numeric_limits<double>::infinity();
    for (double sigma : {1.0, -1.0}) {
      const double r = std::max((d.phi * cb.x[0] - sigma * cb.x[0]).lpNorm<Eigen::Infinity>(),
                                (d.phi * cb.y[0] + sigma * cb.y[0]).lpNorm<Eigen::Infinity>());
      best = std::min(best, r);
    }
    record("phi X_1 = +-X_1, phi Y_1 = -+Y_1", best);
  }
  return out;
}

}  // namespace pcm
