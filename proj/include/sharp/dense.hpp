#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "sharp/errors.hpp"
#include "sharp/gauss_rational.hpp"

namespace sharp {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using GMatrix = Mat<GaussRational>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Determinant by fraction Gaussian elimination; pivots are any nonzero entry.
template <typename Scalar>
Scalar exact_determinant(Mat<Scalar> m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws PreconditionError when singular.
template <typename Scalar>
Mat<Scalar> exact_inverse(const Mat<Scalar>& input) {
  if (input.rows() != input.cols()) throw DimensionError("inverse of a non-square matrix");
  const Eigen::Index n = input.rows();
  Mat<Scalar> m = input;
  Mat<Scalar> inv = Mat<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) throw PreconditionError("matrix is singular");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar scale = Scalar(1) / m(col, col);
    m.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(col);
      inv.row(r) -= factor * inv.row(col);
    }
  }
  return inv;
}

template <typename Scalar>
bool is_invertible(const Mat<Scalar>& m) {
  return !is_zero(exact_determinant(m));
}

/// Row-major rational strings, e.g. {{"0","1"},{"-1","0"}}.
GMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> matrix_strings(const GMatrix& m);

/// The block matrix [[0, I], [-I, 0]] of size 2m.
GMatrix standard_symplectic(Eigen::Index size);

}  // namespace sharp
