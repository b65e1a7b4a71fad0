#pragma once

#include <span>
#include <vector>

namespace vandervolt {

/// Row-major dense matrix of doubles.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);
  /// Validates that every entry is finite.
  DenseMatrix(int rows, int cols, std::vector<double> entries);

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const double> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<double> row(int i) {
    return {a_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  std::span<const double> data() const { return a_; }

  DenseMatrix transposed() const;

  /// Rows picked by 0-based index, in the given order.
  DenseMatrix select_rows(std::span<const int> indices) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);

double max_abs(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

}  // namespace vandervolt
