#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcm/exact/matrix.hpp"
#include "pcm/exact/poly.hpp"

namespace pcm {

using exact::ConstMatrix;
using exact::Poly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::VarList;

class FrameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector field as polynomial components against a fixed basis (the frame,
/// or the coordinate basis d/dx_k where stated).
class FieldVec {
 public:
  FieldVec() = default;
  explicit FieldVec(std::size_t dim) : c_(dim) {}
  explicit FieldVec(std::vector<Poly> components) : c_(std::move(components)) {}

  static FieldVec basis(std::size_t dim, std::size_t index);

  std::size_t size() const { return c_.size(); }
  Poly& operator[](std::size_t i) { return c_[i]; }
  const Poly& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Poly>& components() const { return c_; }

  bool is_zero() const;

  FieldVec& operator+=(const FieldVec& o);
  FieldVec& operator-=(const FieldVec& o);
  FieldVec& operator*=(const Poly& f);
  friend FieldVec operator+(FieldVec a, const FieldVec& b) { return a += b; }
  friend FieldVec operator-(FieldVec a, const FieldVec& b) { return a -= b; }
  friend FieldVec operator*(const Poly& f, FieldVec v) { return v *= f; }
  friend FieldVec operator*(FieldVec v, const Poly& f) { return v *= f; }
  FieldVec operator-() const;

  friend bool operator==(const FieldVec& a, const FieldVec& b) { return a.c_ == b.c_; }

 private:
  std::vector<Poly> c_;
};

/// Renders v as a combination of the given basis names, e.g. "2*x*e2 - xi".
std::string render(const FieldVec& v, const std::vector<std::string>& names);

/// A manifold presented through a global frame E_0..E_{N-1}.
class FrameContext {
 public:
  virtual ~FrameContext() = default;

  virtual std::size_t dim() const = 0;
  virtual const std::vector<std::string>& names() const = 0;
  /// Chart coordinates; null for abstract Lie algebras.
  virtual const VarList& coordinates() const = 0;
  /// [E_i, E_j] in frame components.
  virtual const FieldVec& bracket(std::size_t i, std::size_t j) const = 0;
  /// E_i(f).
  virtual Poly derive(std::size_t i, const Poly& f) const = 0;
};

using FramePtr = std::shared_ptr<const FrameContext>;

/// c[i][j][k] with [E_i, E_j] = sum_k c[i][j][k] E_k.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

/// Left-invariant frame of a Lie algebra. Construction checks
/// antisymmetry and the Jacobi identity exactly.
class LieFrame final : public FrameContext {
 public:
  static std::shared_ptr<const LieFrame> create(std::vector<std::string> names,
                                                StructureConstants constants);

  std::size_t dim() const override { return names_.size(); }
  const std::vector<std::string>& names() const override { return names_; }
  const VarList& coordinates() const override { return no_coords_; }
  const FieldVec& bracket(std::size_t i, std::size_t j) const override;
  /// Left-invariant functions only: constants map to 0, anything else throws.
  Poly derive(std::size_t i, const Poly& f) const override;

  const StructureConstants& constants() const { return constants_; }

 private:
  LieFrame(std::vector<std::string> names, StructureConstants constants);

  std::vector<std::string> names_;
  StructureConstants constants_;
  std::vector<FieldVec> table_;
  VarList no_coords_;
};

/// Frame of polynomial vector fields on a chart. The frame matrix must have a
/// nonzero constant determinant so that its inverse is polynomial.
class CoordFrame final : public FrameContext {
 public:
  /// `fields[a]` holds E_a in the coordinate basis.
  static std::shared_ptr<const CoordFrame> create(std::vector<std::string> names, VarList coords,
                                                  std::vector<FieldVec> fields);

  std::size_t dim() const override { return names_.size(); }
  const std::vector<std::string>& names() const override { return names_; }
  const VarList& coordinates() const override { return coords_; }
  const FieldVec& bracket(std::size_t i, std::size_t j) const override;
  Poly derive(std::size_t i, const Poly& f) const override;

  const std::vector<FieldVec>& fields() const { return fields_; }
  /// Coordinate-basis vector expressed in frame components.
  FieldVec to_frame_components(const FieldVec& coordinate_vector) const;

 private:
  CoordFrame(std::vector<std::string> names, VarList coords, std::vector<FieldVec> fields);

  std::vector<std::string> names_;
  VarList coords_;
  std::vector<FieldVec> fields_;
  PolyMatrix inverse_transpose_;
  std::vector<FieldVec> table_;
};

/// [U, V]^k = U(V^k) - V(U^k) for fields in the coordinate basis.
FieldVec coord_bracket(const FieldVec& u, const FieldVec& v, const VarList& coords);

/// Directional derivative U(f) for U in frame components.
Poly apply(const FrameContext& ctx, const FieldVec& u, const Poly& f);

/// Bracket of fields in frame components, expanded with the Leibniz rule.
FieldVec general_bracket(const FieldVec& u, const FieldVec& v, const FrameContext& ctx);

/// [[E_i,E_j],E_k] + [[E_j,E_k],E_i] + [[E_k,E_i],E_j].
FieldVec jacobi_defect(const FrameContext& ctx, std::size_t i, std::size_t j, std::size_t k);

}  // namespace pcm
