#include "vandervolt/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vandervolt/errors.hpp"
#include "vandervolt/linalg.hpp"

namespace vandervolt {

std::string to_string(SelectionMethod method) {
  switch (method) {
    case SelectionMethod::MaxVolIterative: return "maxvol";
    case SelectionMethod::MaxVolExhaustive: return "maxvol-exhaustive";
    case SelectionMethod::MaxMinSvExhaustive: return "maxminsv";
  }
  return "unknown";
}

bool near_singular(double volume, double sigma_min, double scale) {
  (void)volume;  // kept in the signature: callers rank candidates by volume
  return sigma_min <= 1e-10 * std::max(scale, 1.0);
}

std::uint64_t combination_count(int m, int n) {
  if (n < 0 || n > m) return 0;
  double c = 1.0;
  for (int i = 1; i <= n; ++i) {
    c *= static_cast<double>(m - n + i) / static_cast<double>(i);
    if (c > 9.0e18) return UINT64_C(0x7fffffffffffffff);
  }
  return static_cast<std::uint64_t>(c + 0.5);
}

void for_each_combination(int m, int n,
                          const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

void check_shape(const DenseMatrix& v) {
  if (v.rows() < v.cols())
    throw InsufficientTrialBasisError("selection needs at least as many rows as columns");
}

void check_guard(int m, int n) {
  if (combination_count(m, n) > UINT64_C(1000000))
    throw EnumerationTooLargeError("subset enumeration exceeds the 1e6 guard");
}

SelectedBasis finish_selection(const DenseMatrix& v, std::vector<int> rows,
                               SelectionMethod method) {
  std::sort(rows.begin(), rows.end());
  const DenseMatrix a = v.select_rows(rows);
  const auto spectrum = singular_values(a);
  SelectedBasis sel;
  sel.row_indices = std::move(rows);
  sel.method = method;
  sel.volume = std::fabs(determinant(a));
  sel.sigma_min = spectrum.sigma_min();
  sel.sigma_max = spectrum.sigma_max();
  sel.dismissed = near_singular(sel.volume, sel.sigma_min, sel.sigma_max);
  return sel;
}

/// Row choices of Gaussian elimination with partial pivoting on the
/// rectangular matrix. Returns false when a pivot column is exactly zero.
bool lu_row_choices(const DenseMatrix& v, std::vector<int>& chosen) {
  const int m = v.rows();
  const int n = v.cols();
  DenseMatrix work = v;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  chosen.clear();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = 0; r < m; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      const double val = std::fabs(work(r, col));
      if (val > best) {
        best = val;
        pivot = r;
      }
    }
    if (pivot < 0 || best == 0.0) return false;
    used[static_cast<std::size_t>(pivot)] = true;
    chosen.push_back(pivot);
    for (int r = 0; r < m; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      const double f = work(r, col) / work(pivot, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) work(r, j) -= f * work(pivot, j);
    }
  }
  return true;
}

}  // namespace

SelectedBasis maxvol_rows(const DenseMatrix& v, double tol, MaxVolTrace* trace) {
  check_shape(v);
  if (tol < 0.0) throw DimensionError("MaxVol tolerance must be >= 0");
  const int m = v.rows();
  const int n = v.cols();

  std::vector<int> rows;
  if (!lu_row_choices(v, rows)) {
    // Rank deficient: pad with the smallest unused indices and report a
    // dismissed selection.
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int r : rows) used[static_cast<std::size_t>(r)] = true;
    for (int r = 0; r < m && static_cast<int>(rows.size()) < n; ++r)
      if (!used[static_cast<std::size_t>(r)]) rows.push_back(r);
    SelectedBasis sel = finish_selection(v, std::move(rows), SelectionMethod::MaxVolIterative);
    sel.volume = 0.0;
    sel.dismissed = true;
    return sel;
  }

  const int swap_cap = 200 * n;
  int swaps = 0;
  std::vector<bool> selected(static_cast<std::size_t>(m), false);
  for (int r : rows) selected[static_cast<std::size_t>(r)] = true;

  while (true) {
    const DenseMatrix a = v.select_rows(rows);
    const double vol = std::fabs(determinant(a));
    const DenseMatrix b = matmul(v, inverse(a));

    double best = 0.0;
    int best_i = -1, best_j = -1;
    for (int i = 0; i < m; ++i) {
      if (selected[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < n; ++j) {
        const double val = std::fabs(b(i, j));
        if (val > best) {
          best = val;
          best_i = i;
          best_j = j;
        }
      }
    }

    if (trace) ++trace->iterations;
    if (best <= 1.0 + tol) {
      if (trace) trace->final_dominance = max_abs(b);
      break;
    }
    if (swaps >= swap_cap) {
      std::vector<int> last = rows;
      std::sort(last.begin(), last.end());
      throw MaxVolConvergenceError("MaxVol did not reach a dominant submatrix within the swap cap",
                                   std::move(last));
    }

    selected[static_cast<std::size_t>(rows[static_cast<std::size_t>(best_j)])] = false;
    selected[static_cast<std::size_t>(best_i)] = true;
    rows[static_cast<std::size_t>(best_j)] = best_i;
    ++swaps;
    if (trace)
      trace->swaps.push_back({best, vol,
                              std::fabs(determinant(v.select_rows(rows)))});
  }

  return finish_selection(v, std::move(rows), SelectionMethod::MaxVolIterative);
}

SelectedBasis exhaustive_maxvol(const DenseMatrix& v) {
  check_shape(v);
  check_guard(v.rows(), v.cols());
  std::vector<int> best_rows;
  double best_vol = -1.0;
  for_each_combination(v.rows(), v.cols(), [&](std::span<const int> combo) {
    const double vol = std::fabs(determinant(v.select_rows(combo)));
    if (vol > best_vol) {
      best_vol = vol;
      best_rows.assign(combo.begin(), combo.end());
    }
  });
  SelectedBasis sel = finish_selection(v, std::move(best_rows), SelectionMethod::MaxVolExhaustive);
  sel.volume = best_vol;
  return sel;
}

SelectedBasis exhaustive_maxminsv(const DenseMatrix& v) {
  check_shape(v);
  check_guard(v.rows(), v.cols());
  std::vector<int> best_rows;
  double best_sv = -1.0;
  for_each_combination(v.rows(), v.cols(), [&](std::span<const int> combo) {
    const double sv = singular_values(v.select_rows(combo)).sigma_min();
    if (sv > best_sv) {
      best_sv = sv;
      best_rows.assign(combo.begin(), combo.end());
    }
  });
  return finish_selection(v, std::move(best_rows), SelectionMethod::MaxMinSvExhaustive);
}

}  // namespace vandervolt
