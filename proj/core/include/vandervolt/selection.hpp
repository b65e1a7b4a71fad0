#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vandervolt/dense_matrix.hpp"

namespace vandervolt {

enum class SelectionMethod { MaxVolIterative, MaxVolExhaustive, MaxMinSvExhaustive };

std::string to_string(SelectionMethod method);

/// An n-row selection of the m x n trial Vandermonde matrix, with the
/// diagnostics needed to judge it.
struct SelectedBasis {
  std::vector<int> row_indices;  // 0-based, sorted ascending
  SelectionMethod method = SelectionMethod::MaxVolIterative;
  double volume = 0.0;     // |det| of the selected submatrix
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool dismissed = false;
};

/// true iff sigma_min <= 1e-10 * max(scale, 1); scale is the submatrix's
/// largest singular value.
bool near_singular(double volume, double sigma_min, double scale);

/// Per-swap record of a MaxVol run: the pivot entry magnitude |B_ij| and
/// |det A| before/after the swap.
struct MaxVolSwap {
  double entry_magnitude;
  double volume_before;
  double volume_after;
};

struct MaxVolTrace {
  std::vector<MaxVolSwap> swaps;
  double final_dominance = 0.0;  // max |(V A^{-1})_{ij}| at termination
  int iterations = 0;
};

/// Dominant-submatrix iteration: start from the LU partial-pivot row
/// choices, then repeatedly swap in the row giving the largest entry of
/// V A^{-1} until every entry is <= 1 + tol. Swap cap 200*n; exceeding it
/// throws MaxVolConvergenceError carrying the last row set. A rank
/// deficient V yields a dismissed result with volume 0.
SelectedBasis maxvol_rows(const DenseMatrix& v, double tol, MaxVolTrace* trace = nullptr);

/// Global |det| maximizer over all n-row subsets, ties resolved by the
/// lexicographically smallest index set. Guarded at C(m,n) <= 1e6.
SelectedBasis exhaustive_maxvol(const DenseMatrix& v);

/// Global sigma_min maximizer over all n-row subsets, same tie rule and guard.
SelectedBasis exhaustive_maxminsv(const DenseMatrix& v);

/// C(m,n), saturated at 2^63-1.
std::uint64_t combination_count(int m, int n);

/// Visit all n-subsets of {0..m-1} in lexicographic order.
void for_each_combination(int m, int n,
                          const std::function<void(std::span<const int>)>& visit);

}  // namespace vandervolt
