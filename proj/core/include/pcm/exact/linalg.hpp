#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pcm/exact/matrix.hpp"

namespace pcm::exact {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by symmetric congruence elimination; throws
/// std::invalid_argument on a non-symmetric input.
Inertia signature(const ConstMatrix& gram);

std::size_t rank(const ConstMatrix& m);

/// Rank over the fraction field (fraction-free Bareiss elimination).
std::size_t poly_rank(const PolyMatrix& m);

Scalar determinant(const ConstMatrix& m);
Poly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
std::optional<ConstMatrix> inverse(const ConstMatrix& m);

/// All order x order minors of `m`, zero minors dropped. When
/// `stop_at_unit` is set, enumeration ends at the first nonzero constant minor.
std::vector<Poly> minors(const PolyMatrix& m, std::size_t order, bool stop_at_unit = false);

enum class SolveKind { kUnique, kInconsistent, kUnderdetermined };

struct LinearSolution {
  SolveKind kind = SolveKind::kInconsistent;
  /// The solution when unique; a particular solution (free unknowns = 0)
  /// when underdetermined; empty when inconsistent.
  std::vector<Scalar> values;
  std::vector<std::size_t> free_unknowns;
};

LinearSolution solve_const_linear(const ConstMatrix& a, std::span<const Scalar> b);

}  // namespace pcm::exact
