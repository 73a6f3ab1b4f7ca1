#include "pcm/curvature.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pcm/exact/linalg.hpp"

namespace pcm {

namespace {

std::string pair_location(std::size_t i, std::size_t j, const std::vector<std::string>& names) {
  return "(" + names.at(i) + ", " + names.at(j) + ")";
}

std::string triple_location(std::size_t i, std::size_t j, std::size_t k,
                            const std::vector<std::string>& names) {
  return "(" + names.at(i) + ", " + names.at(j) + ", " + names.at(k) + ")";
}

}  // namespace

FieldVec RiemannTensor::apply(const FieldVec& x, const FieldVec& y, const FieldVec& z) const {
  FieldVec out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      const Poly xy = x[a] * y[b];
      for (std::size_t c = 0; c < dim_; ++c) {
        if (z[c].is_zero()) continue;
        const FieldVec& rv = (*this)(a, b, c);
        if (rv.is_zero()) continue;
        out += (xy * z[c]) * rv;
      }
    }
  }
  return out;
}

Connection levi_civita(const ParacontactData& s) {
  const std::size_t n = s.dim();
  const FrameContext& f = s.frame();
  const ConstMatrix& g = s.metric();
  const ConstMatrix& ginv = s.metric_inverse();

  // lower(i,j,k) = g(nabla_{E_i} E_j, E_k), from
  // 2 g(nabla_X Y, Z) = X g(Y,Z) + Y g(X,Z) - Z g(X,Y) + g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X).
  auto g_of = [&](const FieldVec& v, std::size_t k) {
    Poly acc;
    for (std::size_t a = 0; a < n; ++a)
      if (!v[a].is_zero() && !g(a, k).is_zero()) acc += v[a] * g(a, k);
    return acc;
  };
  const Scalar half = Scalar::from_ratio(1, 2);
  Connection nabla(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> lower(n);
      for (std::size_t k = 0; k < n; ++k) {
        Poly v = f.derive(i, Poly(g(j, k))) + f.derive(j, Poly(g(i, k))) - f.derive(k, Poly(g(i, j)));
        v += g_of(f.bracket(i, j), k);
        v -= g_of(f.bracket(i, k), j);
        v -= g_of(f.bracket(j, k), i);
        lower[k] = v * half;
      }
      FieldVec& out = nabla(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        Poly acc;
        for (std::size_t k = 0; k < n; ++k)
          if (!ginv(l, k).is_zero() && !lower[k].is_zero()) acc += lower[k] * ginv(l, k);
        out[l] = std::move(acc);
      }
    }
  return nabla;
}

FieldVec covariant_derivative(const FrameContext& f, const Connection& nabla, std::size_t i,
                              const FieldVec& v) {
  const std::size_t n = f.dim();
  FieldVec out(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (v[l].is_zero()) continue;
    out[l] += f.derive(i, v[l]);
    const FieldVec& gam = nabla(i, l);
    if (!gam.is_zero()) out += v[l] * gam;
  }
  return out;
}

AxiomReport check_connection(const ParacontactData& s, const Connection& nabla) {
  AxiomReport report;
  const std::size_t n = s.dim();
  const FrameContext& f = s.frame();
  const auto& names = f.names();

  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = i + 1; j < n && ok; ++j) {
      const FieldVec t = nabla(i, j) - nabla(j, i) - f.bracket(i, j);
      if (!t.is_zero()) {
        report.fail("torsion = 0", render(t, names), pair_location(i, j, names));
        ok = false;
      }
    }
  if (ok) report.pass("torsion = 0");

  ok = true;
  for (std::size_t k = 0; k < n && ok; ++k)
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i; j < n && ok; ++j) {
        Poly d = f.derive(k, Poly(s.metric()(i, j)));
        d -= s.metric_of(nabla(k, i), FieldVec::basis(n, j));
        d -= s.metric_of(FieldVec::basis(n, i), nabla(k, j));
        if (!d.is_zero()) {
          report.fail("nabla g = 0", d.str(), triple_location(k, i, j, names));
          ok = false;
        }
      }
  if (ok) report.pass("nabla g = 0");
  return report;
}

RiemannTensor riemann(const ParacontactData& s, const Connection& nabla) {
  const std::size_t n = s.dim();
  const FrameContext& f = s.frame();
  RiemannTensor r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldVec& br = f.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        FieldVec v = covariant_derivative(f, nabla, i, nabla(j, k));
        v -= covariant_derivative(f, nabla, j, nabla(i, k));
        for (std::size_t p = 0; p < n; ++p) {
          if (br[p].is_zero()) continue;
          v -= br[p] * nabla(p, k);
        }
        r(j, i, k) = -v;
        r(i, j, k) = std::move(v);
      }
    }
  return r;
}

AxiomReport curvature_identities(const ParacontactData& s, const RiemannTensor& r) {
  AxiomReport report;
  const std::size_t n = s.dim();
  const auto& names = s.frame().names();

  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t k = 0; k < n && ok; ++k) {
        const FieldVec t = r(i, j, k) + r(j, i, k);
        if (!t.is_zero()) {
          report.fail("R(X,Y) = -R(Y,X)", render(t, names), triple_location(i, j, k, names));
          ok = false;
        }
      }
  if (ok) report.pass("R(X,Y) = -R(Y,X)");

  ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = i + 1; j < n && ok; ++j)
      for (std::size_t k = j + 1; k < n && ok; ++k) {
        const FieldVec t = r(i, j, k) + r(j, k, i) + r(k, i, j);
        if (!t.is_zero()) {
          report.fail("first Bianchi identity", render(t, names), triple_location(i, j, k, names));
          ok = false;
        }
      }
  if (ok) report.pass("first Bianchi identity");

  ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = i + 1; j < n && ok; ++j)
      for (std::size_t k = 0; k < n && ok; ++k)
        for (std::size_t l = k; l < n && ok; ++l) {
          const Poly t = s.metric_of(r(i, j, k), FieldVec::basis(n, l)) +
                         s.metric_of(r(i, j, l), FieldVec::basis(n, k));
          if (!t.is_zero()) {
            report.fail("g(R(X,Y)Z, W) = -g(R(X,Y)W, Z)", t.str(),
                        triple_location(i, j, k, names) + " with " + names[l]);
            ok = false;
          }
        }
  if (ok) report.pass("g(R(X,Y)Z, W) = -g(R(X,Y)W, Z)");
  return report;
}

namespace {

// R(E_i, E_j)xi - kappa (eta_j E_i - eta_i E_j) - mu (eta_j hE_i - eta_i hE_j)
FieldVec nullity_residual(const ParacontactData& s, const RiemannTensor& r, const PolyMatrix& h,
                          const Scalar& kappa, const Scalar& mu, std::size_t i, std::size_t j) {
  const std::size_t n = s.dim();
  const FieldVec ei = FieldVec::basis(n, i);
  const FieldVec ej = FieldVec::basis(n, j);
  FieldVec res = r.apply(ei, ej, s.xi());
  const Poly& eta_i = s.eta()[i];
  const Poly& eta_j = s.eta()[j];
  FieldVec lin = eta_j * ei - eta_i * ej;
  FieldVec hlin = eta_j * FieldVec(h.column(i)) - eta_i * FieldVec(h.column(j));
  res -= lin * Poly(kappa);
  res -= hlin * Poly(mu);
  return res;
}

}  // namespace

AxiomReport nullity_verify(const ParacontactData& s, const RiemannTensor& r, const PolyMatrix& h,
                           const Scalar& kappa, const Scalar& mu) {
  AxiomReport report;
  const auto& names = s.frame().names();
  const std::string name = "R(X,Y)xi = kappa(eta(Y)X - eta(X)Y) + mu(eta(Y)hX - eta(X)hY)";
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      const FieldVec res = nullity_residual(s, r, h, kappa, mu, i, j);
      if (!res.is_zero()) {
        report.fail(name, render(res, names), pair_location(i, j, names));
        return report;
      }
    }
  report.pass(name);
  return report;
}

NullityVerdict nullity_infer(const ParacontactData& s, const RiemannTensor& r, const PolyMatrix& h) {
  const std::size_t n = s.dim();
  const auto& names = s.frame().names();
  NullityVerdict verdict;

  // One equation kappa * b + mu * c = a per (frame index, component, monomial).
  std::vector<std::array<Scalar, 3>> rows;
  auto solve = [&]() {
    ConstMatrix a(rows.size(), 2);
    std::vector<Scalar> rhs(rows.size());
    for (std::size_t q = 0; q < rows.size(); ++q) {
      a(q, 0) = rows[q][0];
      a(q, 1) = rows[q][1];
      rhs[q] = rows[q][2];
    }
    return exact::solve_const_linear(a, rhs);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const FieldVec ei = FieldVec::basis(n, i);
    const FieldVec lhs = r.apply(ei, s.xi(), s.xi());
    const FieldVec kappa_part = ei - s.eta()[i] * s.xi();
    const FieldVec mu_part(h.column(i));
    for (std::size_t l = 0; l < n; ++l) {
      std::map<exact::Monomial, std::array<Scalar, 3>, exact::GrlexGreater> coeffs;
      const VarList& vars = s.frame().coordinates();
      auto collect = [&](const Poly& p, int slot) {
        const Poly lifted = p.with_vars(vars);
        for (const auto& [m, c] : lifted.terms()) coeffs[m][slot] += c;
      };
      collect(kappa_part[l], 0);
      collect(mu_part[l], 1);
      collect(lhs[l], 2);
      for (auto& [m, row] : coeffs) rows.push_back(row);
    }
    if (solve().kind == exact::SolveKind::kInconsistent) {
      verdict.kind = NullityVerdict::Kind::kNone;
      verdict.witness = render(lhs, names);
      verdict.location = "R(" + names[i] + ", xi)xi";
      return verdict;
    }
  }

  const exact::LinearSolution sol = solve();
  const Scalar kappa = sol.values[0];
  const Scalar mu = sol.values[1];
  const AxiomReport full = nullity_verify(s, r, h, kappa, mu);
  if (!full.passed()) {
    verdict.kind = NullityVerdict::Kind::kNone;
    verdict.witness = full.checks.front().witness;
    verdict.location = full.checks.front().location;
    return verdict;
  }
  auto is_free = [&](std::size_t idx) {
    return std::find(sol.free_unknowns.begin(), sol.free_unknowns.end(), idx) !=
           sol.free_unknowns.end();
  };
  verdict.kind = sol.kind == exact::SolveKind::kUnique ? NullityVerdict::Kind::kConstants
                                                       : NullityVerdict::Kind::kFamily;
  if (!is_free(0)) verdict.kappa = kappa;
  if (!is_free(1)) verdict.mu = mu;
  return verdict;
}

AxiomReport h_squared_check(const ParacontactData& s, const PolyMatrix& h, const Scalar& kappa) {
  AxiomReport report;
  const PolyMatrix phi2 = s.phi() * s.phi();
  check_zero_matrix(report, "h^2 = (kappa+1) phi^2", h * h - phi2.scaled(Poly(kappa + Scalar(1))),
                    s.frame().names());
  return report;
}

ParaSasakianCurvature parasasakian_curvature_check(const ParacontactData& s,
                                                   const RiemannTensor& r, const PolyMatrix& h) {
  ParaSasakianCurvature out;
  const std::string name = "R(X,Y)xi = -(eta(Y)X - eta(X)Y)";
  const PolyMatrix zero(s.dim(), s.dim());
  const AxiomReport rep = nullity_verify(s, r, zero, Scalar(-1), Scalar(0));
  const Check& c = rep.checks.front();
  if (c.pass) {
    out.report.pass(name);
  } else {
    out.report.fail(name, c.witness, c.location);
  }
  out.h_nonzero = !h.is_zero();
  return out;
}

CurvatureBundle compute_curvature(const ParacontactData& s) {
  CurvatureBundle b;
  b.h = compute_h(s);
  b.nabla = levi_civita(s);
  b.r = riemann(s, b.nabla);
  return b;
}

}  // namespace pcm
