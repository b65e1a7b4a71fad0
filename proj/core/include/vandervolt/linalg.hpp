#pragma once

#include <span>
#include <vector>

#include "vandervolt/dense_matrix.hpp"

namespace vandervolt {

/// P*A = L*U with partial (row) pivoting. permutation[i] is the original
/// row of A sitting at position i of P*A; sign is the permutation parity.
struct LUFactorization {
  std::vector<int> permutation;
  DenseMatrix lower;  // unit lower triangular
  DenseMatrix upper;
  int sign = 1;

  int size() const { return lower.rows(); }

  /// sign * prod(diag(U)) = det(A).
  double det() const;

  /// Solve A x = b through L and U.
  std::vector<double> solve(std::span<const double> b) const;
};

/// Partial pivoting by largest absolute value, ties broken by smallest row
/// index. Throws SingularMatrixError (with the failing column) when a pivot
/// column is exactly zero.
LUFactorization lu_factor(const DenseMatrix& a);

/// 0.0 when the matrix is structurally singular.
double determinant(const DenseMatrix& a);

std::vector<double> solve(const DenseMatrix& a, std::span<const double> b);

DenseMatrix inverse(const DenseMatrix& a);

/// Forward substitution against a unit lower triangular matrix.
std::vector<double> solve_unit_lower(const DenseMatrix& l, std::span<const double> b);

/// Back substitution against an upper triangular matrix.
std::vector<double> solve_upper(const DenseMatrix& u, std::span<const double> b);

/// Forward substitution against a (non-unit) lower triangular matrix.
std::vector<double> solve_lower(const DenseMatrix& l, std::span<const double> b);

/// Nonincreasing singular values.
class SingularSpectrum {
public:
  explicit SingularSpectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  double sigma_max() const { return values_.front(); }
  double sigma_min() const { return values_.back(); }
  double spectral_norm() const { return sigma_max(); }
  double frobenius_norm() const;

private:
  std::vector<double> values_;
};

/// One-sided Jacobi iteration; converged when every column pair's dot
/// product is <= 1e-14 times the product of the column norms, capped at
/// 60 sweeps.
SingularSpectrum singular_values(const DenseMatrix& a);

}  // namespace vandervolt
