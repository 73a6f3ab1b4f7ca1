#include "pcm/structure.hpp"

#include "pcm/exact/linalg.hpp"

namespace pcm {

namespace {

std::string entry_location(std::size_t r, std::size_t c, const std::vector<std::string>& names) {
  return "entry (" + names.at(r) + ", " + names.at(c) + ")";
}

std::string pair_location(std::size_t i, std::size_t j, const std::vector<std::string>& names) {
  return "(" + names.at(i) + ", " + names.at(j) + ")";
}

}  // namespace

ParacontactData::ParacontactData(FramePtr frame, PolyMatrix phi, FieldVec xi,
                                 std::vector<Poly> eta, ConstMatrix metric)
    : frame_(std::move(frame)),
      phi_(std::move(phi)),
      xi_(std::move(xi)),
      eta_(std::move(eta)),
      metric_(std::move(metric)) {
  if (!frame_) throw StructureError("structure without frame");
  const std::size_t n = frame_->dim();
  if (n < 3 || n % 2 == 0) throw StructureError("frame dimension must be odd and at least 3");
  if (phi_.rows() != n || phi_.cols() != n) throw StructureError("phi must be dim x dim");
  if (xi_.size() != n) throw StructureError("xi must have dim components");
  if (eta_.size() != n) throw StructureError("eta must have dim components");
  if (metric_.rows() != n || metric_.cols() != n) throw StructureError("metric must be dim x dim");
  if (!metric_.is_symmetric()) throw StructureError("metric is not symmetric");
  auto inv = exact::inverse(metric_);
  if (!inv) throw StructureError("metric is degenerate");
  metric_inverse_ = std::move(*inv);

  const VarList& coords = frame_->coordinates();
  auto lift = [&](Poly& p) { p = p.with_vars(coords); };
  try {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) lift(phi_(r, c));
    for (std::size_t i = 0; i < n; ++i) {
      lift(xi_[i]);
      lift(eta_[i]);
    }
  } catch (const exact::VariableError& e) {
    throw StructureError(std::string("structure tensors use foreign variables: ") + e.what());
  }
  if (!coords) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!phi_(r, c).is_constant()) throw StructureError("Lie algebra structure needs constant phi");
  }
}

FieldVec apply_matrix(const PolyMatrix& m, const FieldVec& v) {
  if (m.cols() != v.size()) throw StructureError("apply_matrix: dimension mismatch");
  FieldVec out(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(k, j).is_zero() || v[j].is_zero()) continue;
      out[k] += m(k, j) * v[j];
    }
  return out;
}

FieldVec ParacontactData::apply_phi(const FieldVec& v) const { return apply_matrix(phi_, v); }

Poly ParacontactData::eta_of(const FieldVec& v) const {
  Poly acc;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!eta_[i].is_zero() && !v[i].is_zero()) acc += eta_[i] * v[i];
  return acc;
}

Poly ParacontactData::metric_of(const FieldVec& u, const FieldVec& v) const {
  Poly acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (metric_(i, j).is_zero() || v[j].is_zero()) continue;
      acc += (u[i] * v[j]) * metric_(i, j);
    }
  }
  return acc;
}

void check_zero_matrix(AxiomReport& report, const std::string& name, const PolyMatrix& m,
                       const std::vector<std::string>& names) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) {
        report.fail(name, m(r, c).str(), entry_location(r, c, names));
        return;
      }
  report.pass(name);
}

AxiomReport validate_almost_paracontact(const ParacontactData& s) {
  AxiomReport report;
  const std::size_t n = s.dim();
  const auto& names = s.frame().names();
  const PolyMatrix& phi = s.phi();

  PolyMatrix target = PolyMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) target(r, c) -= s.xi()[r] * s.eta()[c];
  check_zero_matrix(report, "phi^2 = I - eta (x) xi", phi * phi - target, names);

  const Poly residual = s.eta_of(s.xi()) - Poly(1);
  if (residual.is_zero()) {
    report.pass("eta(xi) = 1");
  } else {
    report.fail("eta(xi) = 1", residual.str());
  }

  // dim ker(phi -+ I) = n on the whole space; xi lies in neither eigenspace,
  // so this is the rank-n condition on ker eta.
  const PolyMatrix id = PolyMatrix::identity(n);
  const std::size_t want = s.n();
  const std::size_t plus = n - exact::poly_rank(phi - id);
  const std::size_t minus = n - exact::poly_rank(phi + id);
  if (plus == want) {
    report.pass("dim D+ = n");
  } else {
    report.fail("dim D+ = n", "dim D+ = " + std::to_string(plus));
  }
  if (minus == want) {
    report.pass("dim D- = n");
  } else {
    report.fail("dim D- = n", "dim D- = " + std::to_string(minus));
  }
  return report;
}

Poly d_eta(const ParacontactData& s, std::size_t i, std::size_t j) {
  const FrameContext& f = s.frame();
  Poly v = f.derive(i, s.eta()[j]) - f.derive(j, s.eta()[i]) - s.eta_of(f.bracket(i, j));
  v *= Scalar::from_ratio(1, 2);
  return v;
}

AxiomReport validate_metric(const ParacontactData& s) {
  AxiomReport report;
  const std::size_t n = s.dim();
  const auto& names = s.frame().names();
  const PolyMatrix g = exact::to_poly(s.metric());
  const PolyMatrix& phi = s.phi();

  PolyMatrix compat = phi.transpose() * g * phi + g;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) compat(r, c) -= s.eta()[r] * s.eta()[c];
  check_zero_matrix(report, "g(phi X, phi Y) = -g(X,Y) + eta(X)eta(Y)", compat, names);

  const PolyMatrix g_phi = g * phi;
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      const Poly diff = d_eta(s, i, j) - g_phi(i, j);
      if (!diff.is_zero()) {
        report.fail("d eta(X,Y) = g(X, phi Y)", diff.str(), pair_location(i, j, names));
        ok = false;
      }
    }
  if (ok) report.pass("d eta(X,Y) = g(X, phi Y)");

  const exact::Inertia in = exact::signature(s.metric());
  if (in.positive == s.n() + 1 && in.negative == s.n() && in.null == 0) {
    report.pass("signature (n+1, n)");
  } else {
    report.fail("signature (n+1, n)", "(" + std::to_string(in.positive) + ", " +
                                          std::to_string(in.negative) + ", " +
                                          std::to_string(in.null) + ")");
  }
  return report;
}

PolyMatrix compute_h(const ParacontactData& s) {
  const std::size_t n = s.dim();
  const FrameContext& f = s.frame();
  PolyMatrix h(n, n);
  const Scalar half = Scalar::from_ratio(1, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const FieldVec ej = FieldVec::basis(n, j);
    const FieldVec phi_ej = s.apply_phi(ej);
    FieldVec col = general_bracket(s.xi(), phi_ej, f) - s.apply_phi(general_bracket(s.xi(), ej, f));
    for (std::size_t k = 0; k < n; ++k) h(k, j) = col[k] * half;
  }
  return h;
}

AxiomReport h_properties(const ParacontactData& s, const PolyMatrix& h) {
  AxiomReport report;
  const auto& names = s.frame().names();
  const PolyMatrix g = exact::to_poly(s.metric());
  check_zero_matrix(report, "g(hX, Y) = g(X, hY)", g * h - h.transpose() * g, names);
  check_zero_matrix(report, "h phi = -phi h", h * s.phi() + s.phi() * h, names);

  const FieldVec hxi = apply_matrix(h, s.xi());
  if (hxi.is_zero()) {
    report.pass("h xi = 0");
  } else {
    report.fail("h xi = 0", render(hxi, names));
  }
  const Poly tr = h.trace();
  if (tr.is_zero()) {
    report.pass("tr h = 0");
  } else {
    report.fail("tr h = 0", tr.str());
  }
  return report;
}

AxiomReport h_properties(const ParacontactData& s) { return h_properties(s, compute_h(s)); }

FieldVec normality_tensor(const ParacontactData& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.dim();
  const FrameContext& f = s.frame();
  const FieldVec ei = FieldVec::basis(n, i);
  const FieldVec ej = FieldVec::basis(n, j);
  const FieldVec phi_ei = s.apply_phi(ei);
  const FieldVec phi_ej = s.apply_phi(ej);
  FieldVec t = s.apply_phi(s.apply_phi(f.bracket(i, j)));
  t += general_bracket(phi_ei, phi_ej, f);
  t -= s.apply_phi(general_bracket(phi_ei, ej, f));
  t -= s.apply_phi(general_bracket(ei, phi_ej, f));
  t -= (Poly(2) * d_eta(s, i, j)) * s.xi();
  return t;
}

AxiomReport nijenhuis_normality(const ParacontactData& s) {
  AxiomReport report;
  const auto& names = s.frame().names();
  bool normal = true;
  for (std::size_t i = 0; i < s.dim() && normal; ++i)
    for (std::size_t j = i + 1; j < s.dim() && normal; ++j) {
      const FieldVec t = normality_tensor(s, i, j);
      if (!t.is_zero()) {
        report.fail("normal", render(t, names), pair_location(i, j, names));
        normal = false;
      }
    }
  if (normal) report.pass("normal");

  const bool metric_ok = validate_almost_paracontact(s).passed() && validate_metric(s).passed();
  if (normal && metric_ok) {
    report.pass("paraSasakian");
  } else {
    report.fail("paraSasakian", normal ? "paracontact metric axioms fail" : "not normal");
  }
  return report;
}

bool is_k_paracontact(const ParacontactData& s) { return compute_h(s).is_zero(); }

}  // namespace pcm
