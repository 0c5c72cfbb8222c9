#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hpade/scalar.hpp"

namespace hpade {

template <FieldScalar S>
using Matrix = std::vector<std::vector<S>>;

template <FieldScalar S>
struct NullVector {
  std::vector<S> x;
  int rank = 0;
  int nullity = 0;
  bool normal() const { return nullity == 1; }
};

namespace detail {

struct Echelon {
  std::vector<int> pivot_cols;  // pivot column of row r
  std::vector<int> free_cols;   // ascending
};

/// Column-by-column reduction with partial (row) pivoting. A column whose
/// remaining entries are all below `tol` in modulus is free. Floating mode.
inline Echelon reduce_floating(Matrix<Scalar>& a, int cols, const Real& tol) {
  Echelon e;
  const int rows = static_cast<int>(a.size());
  const Real tol2 = tol * tol;
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    if (r == rows) {
      e.free_cols.push_back(c);
      continue;
    }
    int best = -1;
    Real best_norm = tol2;
    for (int i = r; i < rows; ++i) {
      Real v = norm(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
      if (v > best_norm) {
        best_norm = std::move(v);
        best = i;
      }
    }
    if (best < 0) {
      e.free_cols.push_back(c);
      continue;
    }
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(best)]);
    const auto& prow = a[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      const Scalar factor = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      row[static_cast<std::size_t>(c)] = Scalar::zero(factor.digits());
      for (int j = c + 1; j < cols; ++j) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

/// Bareiss fraction-free elimination in the same column order. Exact mode.
inline Echelon reduce_exact(Matrix<ExactScalar>& a, int cols) {
  Echelon e;
  const int rows = static_cast<int>(a.size());
  ExactScalar prev = ExactScalar::from_int(1);
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    if (r == rows) {
      e.free_cols.push_back(c);
      continue;
    }
    int found = -1;
    for (int i = r; i < rows; ++i)
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        found = i;
        break;
      }
    if (found < 0) {
      e.free_cols.push_back(c);
      continue;
    }
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(found)]);
    const auto& prow = a[static_cast<std::size_t>(r)];
    const ExactScalar piv = prow[static_cast<std::size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const ExactScalar lead = row[static_cast<std::size_t>(c)];
      row[static_cast<std::size_t>(c)] = ExactScalar();
      for (int j = c + 1; j < cols; ++j) {
        auto& x = row[static_cast<std::size_t>(j)];
        x = (piv * x - lead * prow[static_cast<std::size_t>(j)]) / prev;
      }
    }
    // Rows above the pivot row keep their scale; only the trailing block is
    // fraction-free updated, which is all back substitution needs.
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace detail

/// A nonzero solution of the homogeneous system A x = 0 with `cols` unknowns.
///
/// Floating mode equilibrates rows and columns, then eliminates column by
/// column; a column is dependent when its best remaining pivot falls below
/// 10^-(digits/2). Exact mode uses fraction-free elimination. The returned
/// vector is the basis vector of the lowest-index free column, so when the
/// nullspace has dimension > 1 it is the solution supported on the shortest
/// leading block of unknowns.
template <FieldScalar S>
NullVector<S> null_vector(Matrix<S> a, int cols, int digits) {
  const int rows = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw error(errc::dimension_mismatch, "row of length " + std::to_string(row.size()) + ", expected " +
                                                std::to_string(cols));

  detail::Echelon e;
  std::vector<S> col_scale;
  if constexpr (scalar_traits<S>::exact) {
    e = detail::reduce_exact(a, cols);
  } else {
    // Rows and columns far below the largest entry are rounding debris of
    // structurally zero data; scaling them up would manufacture rank.
    const Real guard = rank_tolerance(digits);
    Real global = make_real(0, digits);
    for (const auto& row : a)
      for (const auto& x : row) global = max(global, abs(x));
    for (auto& row : a) {
      Real m = make_real(0, digits);
      for (const auto& x : row) m = max(m, abs(x));
      if (m <= guard * global) continue;
      const Scalar s(Real(1 / m), make_real(0, digits), digits);
      for (auto& x : row) x *= s;
    }
    global = make_real(0, digits);
    for (const auto& row : a)
      for (const auto& x : row) global = max(global, abs(x));
    col_scale.assign(static_cast<std::size_t>(cols), Scalar::one(digits));
    for (int j = 0; j < cols; ++j) {
      Real m = make_real(0, digits);
      for (int i = 0; i < rows; ++i) m = max(m, abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      if (m <= guard * global) continue;
      const Scalar s(Real(1 / m), make_real(0, digits), digits);
      col_scale[static_cast<std::size_t>(j)] = s;
      for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= s;
    }
    e = detail::reduce_floating(a, cols, rank_tolerance(digits));
  }

  NullVector<S> out;
  out.rank = static_cast<int>(e.pivot_cols.size());
  out.nullity = cols - out.rank;
  if (e.free_cols.empty()) throw error(errc::all_zero_solution, "homogeneous system has full column rank");

  const S zero = S::from_int(0, digits);
  std::vector<S> x(static_cast<std::size_t>(cols), zero);
  x[static_cast<std::size_t>(e.free_cols.front())] = S::from_int(1, digits);
  for (int r = out.rank - 1; r >= 0; --r) {
    const int pc = e.pivot_cols[static_cast<std::size_t>(r)];
    const auto& row = a[static_cast<std::size_t>(r)];
    S acc = zero;
    for (int j = pc + 1; j < cols; ++j)
      if (!x[static_cast<std::size_t>(j)].is_zero()) acc += row[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(pc)] = -acc / row[static_cast<std::size_t>(pc)];
  }
  if constexpr (!scalar_traits<S>::exact) {
    for (int j = 0; j < cols; ++j) x[static_cast<std::size_t>(j)] *= col_scale[static_cast<std::size_t>(j)];
  }
  out.x = std::move(x);
  return out;
}

}  // namespace hpade
