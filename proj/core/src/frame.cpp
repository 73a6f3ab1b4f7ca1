#include "pcm/frame.hpp"

#include <sstream>

#include "pcm/exact/linalg.hpp"

namespace pcm {

FieldVec FieldVec::basis(std::size_t dim, std::size_t index) {
  FieldVec v(dim);
  v[index] = Poly(1);
  return v;
}

bool FieldVec::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

FieldVec& FieldVec::operator+=(const FieldVec& o) {
  if (o.size() != size()) throw FrameError("field dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldVec& FieldVec::operator-=(const FieldVec& o) {
  if (o.size() != size()) throw FrameError("field dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldVec& FieldVec::operator*=(const Poly& f) {
  for (auto& p : c_) p *= f;
  return *this;
}

FieldVec FieldVec::operator-() const {
  FieldVec r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

std::string render(const FieldVec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Poly c = v[i];
    if (c.is_zero()) continue;
    bool negative = false;
    if (c.term_count() == 1) {
      const Scalar& lc = c.leading_coefficient();
      const bool mixed = !lc.is_rational() && sgn(lc.rational_part()) != 0;
      if (!mixed && lc.sign() < 0) {
        negative = true;
        c = -c;
      }
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string name = i < names.size() ? names[i] : "E" + std::to_string(i);
    if (c == Poly(1)) {
      os << name;
    } else if (c.term_count() == 1 && c.str().find_first_of("+-") == std::string::npos) {
      os << c.str() << '*' << name;
    } else {
      os << '(' << c.str() << ")*" << name;
    }
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------

LieFrame::LieFrame(std::vector<std::string> names, StructureConstants constants)
    : names_(std::move(names)), constants_(std::move(constants)) {}

std::shared_ptr<const LieFrame> LieFrame::create(std::vector<std::string> names,
                                                 StructureConstants constants) {
  const std::size_t n = names.size();
  if (n == 0) throw FrameError("empty frame");
  if (constants.size() != n) throw FrameError("structure constant table has wrong size");
  for (const auto& row : constants) {
    if (row.size() != n) throw FrameError("structure constant table has wrong size");
    for (const auto& col : row)
      if (col.size() != n) throw FrameError("structure constant table has wrong size");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (constants[i][j][k] != -constants[j][i][k]) {
          throw FrameError("bracket table not antisymmetric at [" + names[i] + ", " + names[j] +
                           "] component " + names[k]);
        }

  std::shared_ptr<LieFrame> frame(new LieFrame(std::move(names), std::move(constants)));
  frame->table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldVec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = Poly(frame->constants_[i][j][k]);
      frame->table_.push_back(std::move(v));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const FieldVec d = jacobi_defect(*frame, i, j, k);
        if (!d.is_zero()) {
          throw FrameError("Jacobi identity fails for (" + frame->names_[i] + ", " +
                           frame->names_[j] + ", " + frame->names_[k] +
                           "): " + render(d, frame->names_));
        }
      }
  return frame;
}

const FieldVec& LieFrame::bracket(std::size_t i, std::size_t j) const {
  return table_.at(i * dim() + j);
}

Poly LieFrame::derive(std::size_t i, const Poly& f) const {
  if (i >= dim()) throw FrameError("frame index out of range");
  if (!f.is_constant()) {
    throw FrameError("Lie algebra frame cannot differentiate non-constant '" + f.str() + "'");
  }
  return Poly();
}

// ---------------------------------------------------------------------------

FieldVec coord_bracket(const FieldVec& u, const FieldVec& v, const VarList& coords) {
  const std::size_t n = coords ? coords->size() : 0;
  if (u.size() != n || v.size() != n) throw FrameError("coord_bracket: dimension mismatch");
  FieldVec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Poly acc = Poly().with_vars(coords);
    for (std::size_t l = 0; l < n; ++l) {
      if (!u[l].is_zero()) acc += u[l] * v[k].with_vars(coords).derive(l);
      if (!v[l].is_zero()) acc -= v[l] * u[k].with_vars(coords).derive(l);
    }
    out[k] = std::move(acc);
  }
  return out;
}

CoordFrame::CoordFrame(std::vector<std::string> names, VarList coords, std::vector<FieldVec> fields)
    : names_(std::move(names)), coords_(std::move(coords)), fields_(std::move(fields)) {}

std::shared_ptr<const CoordFrame> CoordFrame::create(std::vector<std::string> names,
                                                     VarList coords,
                                                     std::vector<FieldVec> fields) {
  const std::size_t n = names.size();
  if (!coords || coords->size() != n) {
    throw FrameError("coordinate frame needs as many coordinates as frame fields");
  }
  if (fields.size() != n) throw FrameError("frame field count does not match dimension");
  PolyMatrix frame_matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (fields[a].size() != n) throw FrameError("frame field " + names[a] + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      fields[a][k] = fields[a][k].with_vars(coords);
      frame_matrix(a, k) = fields[a][k];
    }
  }
  const Poly det = exact::determinant(frame_matrix);
  if (det.is_zero()) throw FrameError("frame fields are linearly dependent");
  if (!det.is_constant()) {
    throw FrameError("frame matrix determinant '" + det.str() +
                     "' is not constant; only constant-determinant frames are supported");
  }

  std::shared_ptr<CoordFrame> frame(new CoordFrame(std::move(names), coords, std::move(fields)));
  // E_a = sum_k F(a,k) d_k, so coordinate components v = F^T w and w = (F^-1)^T v.
  const Scalar inv_det = det.constant_value().inverse();
  frame->inverse_transpose_ = exact::adjugate(frame_matrix).transpose().scaled(Poly(inv_det));
  frame->table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      frame->table_.push_back(frame->to_frame_components(
          coord_bracket(frame->fields_[i], frame->fields_[j], frame->coords_)));
    }
  return frame;
}

const FieldVec& CoordFrame::bracket(std::size_t i, std::size_t j) const {
  return table_.at(i * dim() + j);
}

Poly CoordFrame::derive(std::size_t i, const Poly& f) const {
  if (i >= dim()) throw FrameError("frame index out of range");
  const Poly g = f.with_vars(coords_);
  Poly acc = Poly().with_vars(coords_);
  for (std::size_t k = 0; k < coords_->size(); ++k) {
    if (fields_[i][k].is_zero()) continue;
    acc += fields_[i][k] * g.derive(k);
  }
  return acc;
}

FieldVec CoordFrame::to_frame_components(const FieldVec& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw FrameError("to_frame_components: dimension mismatch");
  FieldVec w(n);
  for (std::size_t a = 0; a < n; ++a) {
    Poly acc = Poly().with_vars(coords_);
    for (std::size_t k = 0; k < n; ++k) {
      if (inverse_transpose_(a, k).is_zero() || v[k].is_zero()) continue;
      acc += inverse_transpose_(a, k) * v[k];
    }
    w[a] = std::move(acc);
  }
  return w;
}

// ---------------------------------------------------------------------------

Poly apply(const FrameContext& ctx, const FieldVec& u, const Poly& f) {
  if (u.size() != ctx.dim()) throw FrameError("apply: dimension mismatch");
  Poly acc;
  if (f.is_constant()) return acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    acc += u[i] * ctx.derive(i, f);
  }
  return acc;
}

FieldVec general_bracket(const FieldVec& u, const FieldVec& v, const FrameContext& ctx) {
  const std::size_t n = ctx.dim();
  if (u.size() != n || v.size() != n) throw FrameError("general_bracket: dimension mismatch");
  FieldVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const FieldVec& b = ctx.bracket(i, j);
      if (b.is_zero()) continue;
      out += (u[i] * v[j]) * b;
    }
  }
  // [fE_i, gE_j] also carries f(E_i g) E_j - g(E_j f) E_i.
  for (std::size_t k = 0; k < n; ++k) {
    out[k] += apply(ctx, u, v[k]);
    out[k] -= apply(ctx, v, u[k]);
  }
  return out;
}

FieldVec jacobi_defect(const FrameContext& ctx, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = ctx.dim();
  const FieldVec ei = FieldVec::basis(n, i);
  const FieldVec ej = FieldVec::basis(n, j);
  const FieldVec ek = FieldVec::basis(n, k);
  return general_bracket(ctx.bracket(i, j), ek, ctx) + general_bracket(ctx.bracket(j, k), ei, ctx) +
         general_bracket(ctx.bracket(k, i), ej, ctx);
}

}  // namespace pcm
