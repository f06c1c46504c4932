#ifndef ROOKFFT_MATRIX_HPP_
#define ROOKFFT_MATRIX_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace rookfft {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// An operation is one complex multiplication followed by one complex
// addition.
struct OpCounter {
  std::uint64_t multiply_adds = 0;
  // Breakdown filled in by the recursive transform: work done at the top
  // level after the subproblems return, and the largest subproblem count.
  std::uint64_t top_level_combine = 0;
  std::uint64_t max_subproblem = 0;

  OpCounter& operator+=(std::uint64_t ops) {
    multiply_adds += ops;
    return *this;
  }
};

// Real sparse matrix in triplet form.  Generator images of the seminormal
// and Halverson representations have rational entries.
class SparseMatrix {
 public:
  struct Entry {
    int row;
    int col;
    double value;
  };

  SparseMatrix() = default;
  explicit SparseMatrix(int dim) : dim_(dim) {}

  static SparseMatrix from_dense(const Matrix& m, double tol = 1e-12);

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  void add(int row, int col, double value);

  int max_row_nonzeros() const;
  int max_col_nonzeros() const;
  Matrix dense() const;

 private:
  int dim_ = 0;
  std::vector<Entry> entries_;
};

// a <- g * a.  Counts nonzeros(g) * a.cols() operations.
void left_multiply(const SparseMatrix& g, Matrix& a, OpCounter& ops);
// a <- a * g.  Counts nonzeros(g) * a.rows() operations.
void right_multiply(Matrix& a, const SparseMatrix& g, OpCounter& ops);
// acc <- acc + a.  Counts acc.size() operations.
void accumulate(Matrix& acc, const Matrix& a, OpCounter& ops);

}  // namespace rookfft

#endif  // ROOKFFT_MATRIX_HPP_
