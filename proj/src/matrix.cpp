#include "rookfft/matrix.hpp"

#include <algorithm>

#include "rookfft/errors.hpp"

namespace rookfft {

SparseMatrix SparseMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("sparse generator images are square");
  SparseMatrix s(static_cast<int>(m.rows()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > tol) {
        s.add(static_cast<int>(r), static_cast<int>(c), m(r, c).real());
      }
    }
  }
  return s;
}

void SparseMatrix::add(int row, int col, double value) {
  for (auto& e : entries_) {
    if (e.row == row && e.col == col) {
      e.value += value;
      return;
    }
  }
  entries_.push_back({row, col, value});
}

int SparseMatrix::max_row_nonzeros() const {
  std::vector<int> counts(static_cast<std::size_t>(dim_), 0);
  for (const auto& e : entries_) {
    if (e.value != 0.0) ++counts[static_cast<std::size_t>(e.row)];
  }
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

int SparseMatrix::max_col_nonzeros() const {
  std::vector<int> counts(static_cast<std::size_t>(dim_), 0);
  for (const auto& e : entries_) {
    if (e.value != 0.0) ++counts[static_cast<std::size_t>(e.col)];
  }
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Matrix SparseMatrix::dense() const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (const auto& e : entries_) m(e.row, e.col) += e.value;
  return m;
}

void left_multiply(const SparseMatrix& g, Matrix& a, OpCounter& ops) {
  if (g.dim() != a.rows()) throw DimensionError("left_multiply shape mismatch");
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (const auto& e : g.entries()) out.row(e.row) += e.value * a.row(e.col);
  ops += static_cast<std::uint64_t>(g.nonzeros()) * static_cast<std::uint64_t>(a.cols());
  a.swap(out);
}

void right_multiply(Matrix& a, const SparseMatrix& g, OpCounter& ops) {
  if (g.dim() != a.cols()) throw DimensionError("right_multiply shape mismatch");
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (const auto& e : g.entries()) out.col(e.col) += e.value * a.col(e.row);
  ops += static_cast<std::uint64_t>(g.nonzeros()) * static_cast<std::uint64_t>(a.rows());
  a.swap(out);
}

void accumulate(Matrix& acc, const Matrix& a, OpCounter& ops) {
  acc += a;
  ops += static_cast<std::uint64_t>(a.size());
}

}  // namespace rookfft
