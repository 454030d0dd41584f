#include "sharp/dense.hpp"

#include <stdexcept>

namespace sharp {

GMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = n == 0 ? 0 : static_cast<Eigen::Index>(rows.front().size());
  GMatrix m(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) throw DimensionError("ragged matrix rows");
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = parse_gauss_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_strings(const GMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i].push_back(to_string(m(i, j)));
  return rows;
}

GMatrix standard_symplectic(Eigen::Index size) {
  if (size % 2 != 0) throw DimensionError("standard symplectic matrix needs even size");
  const Eigen::Index half = size / 2;
  GMatrix j = GMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < half; ++i) {
    j(i, i + half) = GaussRational(1);
    j(i + half, i) = GaussRational(-1);
  }
  return j;
}

}  // namespace sharp
