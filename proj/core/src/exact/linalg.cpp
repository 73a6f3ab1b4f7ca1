#include "pcm/exact/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace pcm::exact {

Inertia signature(const ConstMatrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
  Inertia out;
  ConstMatrix a = gram;
  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n && !pivot; ++i)
      if (!a(i, i).is_zero()) pivot = i;
    if (!pivot) {
      // Zero diagonal: a nonzero a(i,j) becomes a diagonal entry 2a(i,j) after
      // the congruence row_i += row_j, col_i += col_j.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (!a(i, j).is_zero()) off = {i, j};
      if (!off) {
        out.null += n;
        break;
      }
      const auto [i, j] = *off;
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      pivot = i;
    }
    const std::size_t p = *pivot;
    const Scalar d = a(p, p);
    (d.sign() > 0 ? out.positive : out.negative) += 1;
    const Scalar dinv = d.inverse();
    ConstMatrix next(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == p) continue;
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == p) continue;
        next(rr, cc) = a(r, c) - a(r, p) * a(p, c) * dinv;
        ++cc;
      }
      ++rr;
    }
    a = std::move(next);
  }
  return out;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ConstMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t r = row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t term_weight(const Poly& p) {
  return p.term_count() * (1 + p.total_degree());
}

// Fraction-free elimination with full pivoting. Returns rank; `det_sign`
// tracks the permutation parity and `last_pivot` the final Bareiss pivot.
std::size_t bareiss(PolyMatrix m, int* det_sign, Poly* last_pivot) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Poly prev(1);
  int sign = 1;
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_w = 0;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c) {
        if (m(r, c).is_zero()) continue;
        const std::size_t w = term_weight(m(r, c));
        if (!best || w < best_w) {
          best = {r, c};
          best_w = w;
        }
      }
    if (!best) break;
    const auto [pr, pc] = *best;
    if (pr != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pr, c), m(k, c));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, pc), m(r, k));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Poly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = Poly::divide_exact(v, prev);
      }
      m(i, k) = Poly();
    }
    prev = m(k, k);
  }
  if (det_sign) *det_sign = sign;
  if (last_pivot) *last_pivot = prev;
  return k;
}

}  // namespace

std::size_t rank(const ConstMatrix& m) {
  ConstMatrix w = m;
  return rref(w, w.cols()).size();
}

std::size_t poly_rank(const PolyMatrix& m) { return bareiss(m, nullptr, nullptr); }

Scalar determinant(const ConstMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  ConstMatrix a = m;
  Scalar det(1);
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k).is_zero()) ++r;
    if (r == n) return Scalar();
    if (r != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(r, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
    }
  }
  return det;
}

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Poly(1);
  int sign = 1;
  Poly last;
  if (bareiss(m, &sign, &last) < m.rows()) return Poly();
  return sign > 0 ? last : -last;
}

namespace {

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  PolyMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = Poly(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly cof = determinant(submatrix(m, all_but(n, i), all_but(n, j)));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::optional<ConstMatrix> inverse(const ConstMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ConstMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  if (rref(aug, n).size() < n) return std::nullopt;
  ConstMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t order, bool stop_at_unit) {
  std::vector<Poly> out;
  if (order == 0 || order > m.rows() || order > m.cols()) return out;
  std::vector<std::size_t> rows(order);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<std::size_t> cols(order);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      Poly d = determinant(submatrix(m, rows, cols));
      if (d.is_zero()) continue;
      const bool unit = d.is_constant();
      out.push_back(std::move(d));
      if (unit && stop_at_unit) return out;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return out;
}

LinearSolution solve_const_linear(const ConstMatrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_const_linear: rhs length mismatch");
  const std::size_t unknowns = a.cols();
  ConstMatrix aug(a.rows(), unknowns + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug(i, j) = a(i, j);
    aug(i, unknowns) = b[i];
  }
  const auto pivots = rref(aug, unknowns);
  LinearSolution sol;
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
    if (!aug(i, unknowns).is_zero()) {
      sol.kind = SolveKind::kInconsistent;
      return sol;
    }
  }
  sol.values.assign(unknowns, Scalar());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.values[pivots[r]] = aug(r, unknowns);
  for (std::size_t j = 0; j < unknowns; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) sol.free_unknowns.push_back(j);
  sol.kind = sol.free_unknowns.empty() ? SolveKind::kUnique : SolveKind::kUnderdetermined;
  return sol;
}

}  // namespace pcm::exact
