#pragma once

#include <compare>
#include <numeric>
#include <vector>

namespace vandervolt {

/// Exponent tuple of a d-variate tensor-product polynomial.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}
  MultiIndex(std::initializer_list<int> e) : exponents(e) {}

  int dimension() const { return static_cast<int>(exponents.size()); }

  int total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  int nonzero_count() const {
    int c = 0;
    for (int e : exponents) c += (e != 0);
    return c;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// All multi-indices with |alpha| <= k in degree-lexicographic order:
/// grouped by total degree ascending, lexicographically descending within
/// each group (for d=2: 1, x1, x2, x1^2, x1*x2, x2^2, ...).
/// Size is C(k+d, d).
std::vector<MultiIndex> total_degree_indices(int d, int k);

/// Multi-indices with |alpha| == degree exactly, lexicographically descending.
std::vector<MultiIndex> fixed_degree_indices(int d, int degree);

}  // namespace vandervolt
