#include "vandervolt/dense_matrix.hpp"

#include <cmath>
#include <utility>

#include "vandervolt/errors.hpp"

namespace vandervolt {

DenseMatrix::DenseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw DimensionError("entry count does not match rows*cols");
  for (double v : a_)
    if (!std::isfinite(v)) throw DimensionError("matrix entries must be finite");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::select_rows(std::span<const int> indices) const {
  DenseMatrix out(static_cast<int>(indices.size()), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int i = indices[k];
    if (i < 0 || i >= rows_) throw DimensionError("row index out of range");
    for (int j = 0; j < cols_; ++j) out(static_cast<int>(k), j) = (*this)(i, j);
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionError("matvec dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    auto r = a.row(i);
    for (int j = 0; j < a.cols(); ++j) s += r[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::fabs(v));
  return m;
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

}  // namespace vandervolt
