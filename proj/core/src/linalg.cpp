#include "vandervolt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "vandervolt/errors.hpp"

namespace vandervolt {

double LUFactorization::det() const {
  double d = static_cast<double>(sign);
  for (int i = 0; i < upper.rows(); ++i) d *= upper(i, i);
  return d;
}

std::vector<double> LUFactorization::solve(std::span<const double> b) const {
  const int n = size();
  if (static_cast<int>(b.size()) != n)
    throw DimensionError("right-hand side length does not match matrix size");
  std::vector<double> pb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pb[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(permutation[static_cast<std::size_t>(i)])];
  auto t = solve_unit_lower(lower, pb);
  return solve_upper(upper, t);
}

LUFactorization lu_factor(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("LU factorization requires a square matrix");
  const int n = a.rows();

  DenseMatrix work = a;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::fabs(work(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::fabs(work(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) throw SingularMatrixError(col);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      std::swap(perm[static_cast<std::size_t>(pivot)], perm[static_cast<std::size_t>(col)]);
      sign = -sign;
    }
    const double d = work(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = work(r, col) / d;
      work(r, col) = f;
      for (int j = col + 1; j < n; ++j) work(r, j) -= f * work(col, j);
    }
  }

  LUFactorization lu;
  lu.permutation = std::move(perm);
  lu.sign = sign;
  lu.lower = DenseMatrix::identity(n);
  lu.upper = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) lu.lower(i, j) = work(i, j);
    for (int j = i; j < n; ++j) lu.upper(i, j) = work(i, j);
  }
  return lu;
}

double determinant(const DenseMatrix& a) {
  try {
    return lu_factor(a).det();
  } catch (const SingularMatrixError&) {
    return 0.0;
  }
}

std::vector<double> solve(const DenseMatrix& a, std::span<const double> b) {
  return lu_factor(a).solve(b);
}

DenseMatrix inverse(const DenseMatrix& a) {
  const auto lu = lu_factor(a);
  const int n = lu.size();
  DenseMatrix inv(n, n);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    e[static_cast<std::size_t>(j)] = 1.0;
    auto col = lu.solve(e);
    e[static_cast<std::size_t>(j)] = 0.0;
    for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<std::size_t>(i)];
  }
  return inv;
}

std::vector<double> solve_unit_lower(const DenseMatrix& l, std::span<const double> b) {
  const int n = l.rows();
  std::vector<double> x(b.begin(), b.end());
  for (int i = 0; i < n; ++i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) s -= l(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s;
  }
  return x;
}

std::vector<double> solve_upper(const DenseMatrix& u, std::span<const double> b) {
  const int n = u.rows();
  std::vector<double> x(b.begin(), b.end());
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= u(i, j) * x[static_cast<std::size_t>(j)];
    const double d = u(i, i);
    if (d == 0.0) throw SingularMatrixError(i);
    x[static_cast<std::size_t>(i)] = s / d;
  }
  return x;
}

std::vector<double> solve_lower(const DenseMatrix& l, std::span<const double> b) {
  const int n = l.rows();
  std::vector<double> x(b.begin(), b.end());
  for (int i = 0; i < n; ++i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) s -= l(i, j) * x[static_cast<std::size_t>(j)];
    const double d = l(i, i);
    if (d == 0.0) throw SingularMatrixError(i);
    x[static_cast<std::size_t>(i)] = s / d;
  }
  return x;
}

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("singular spectrum cannot be empty");
  for (double v : values_)
    if (v < 0.0 || !std::isfinite(v)) throw DimensionError("singular values must be finite and nonnegative");
  if (!std::is_sorted(values_.rbegin(), values_.rend()))
    throw DimensionError("singular values must be nonincreasing");
}

double SingularSpectrum::frobenius_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

SingularSpectrum singular_values(const DenseMatrix& a) {
  // Work with at least as many rows as columns; singular values are
  // invariant under transposition.
  DenseMatrix u = a.rows() >= a.cols() ? a : a.transposed();
  const int m = u.rows();
  const int n = u.cols();

  constexpr double kTol = 1e-14;
  constexpr int kMaxSweeps = 60;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int r = 0; r < m; ++r) {
          const double up = u(r, p);
          const double uq = u(r, q);
          app += up * up;
          aqq += uq * uq;
          apq += up * uq;
        }
        if (std::fabs(apq) <= kTol * std::sqrt(app * aqq)) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int r = 0; r < m; ++r) {
          const double up = u(r, p);
          const double uq = u(r, q);
          u(r, p) = c * up - s * uq;
          u(r, q) = s * up + c * uq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigmas(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += u(r, j) * u(r, j);
    sigmas[static_cast<std::size_t>(j)] = std::sqrt(s);
  }
  std::sort(sigmas.begin(), sigmas.end(), std::greater<>());
  return SingularSpectrum(std::move(sigmas));
}

}  // namespace vandervolt
