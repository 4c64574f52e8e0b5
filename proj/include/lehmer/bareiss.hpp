#pragma once

#include "lehmer/numeric.hpp"

#include <Eigen/Core>

#include <utility>

namespace lehmer {

/// Determinant of a square matrix over an integral domain by fraction-free
/// (Bareiss) elimination. Every division is exact, so `exact_div(Scalar,
/// Scalar)` must be visible for the scalar type. Row swaps are used when a
/// pivot vanishes.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == Scalar(0)) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar numer = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(numer, previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace lehmer
