#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "vandervolt/dense_matrix.hpp"
#include "vandervolt/multi_index.hpp"
#include "vandervolt/prng.hpp"
#include "vandervolt/vandermonde.hpp"

namespace oracle {

/// Every exponent tuple with |alpha| <= k by plain odometer enumeration,
/// then sorted by (total degree asc, lexicographic desc).
inline std::vector<std::vector<int>> total_degree_brute_force(int d, int k) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  while (true) {
    int total = 0;
    for (int e : cur) total += e;
    if (total <= k) all.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == k) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a > b;  // lexicographically descending within a degree group
  });
  return all;
}

/// Chebyshev polynomial via the trigonometric identity, valid on [-1,1].
inline double chebyshev_trig(int k, double x) {
  return std::cos(static_cast<double>(k) * std::acos(x));
}

inline vandervolt::DenseMatrix random_matrix(int rows, int cols, vandervolt::Xorshift64Star& rng) {
  vandervolt::DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = 2.0 * rng.next_double() - 1.0;
  return m;
}

/// Random point of conv(nodes): normalized uniform weights.
inline std::vector<double> random_hull_point(const vandervolt::NodeSet& nodes,
                                             vandervolt::Xorshift64Star& rng) {
  const int n = nodes.size();
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& v : w) {
    v = rng.next_double() + 1e-9;
    total += v;
  }
  std::vector<double> p(static_cast<std::size_t>(nodes.dimension()), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto x = nodes.point(i);
    for (int c = 0; c < nodes.dimension(); ++c)
      p[static_cast<std::size_t>(c)] += w[static_cast<std::size_t>(i)] / total * x[static_cast<std::size_t>(c)];
  }
  return p;
}

/// Is pts[which] inside the convex hull of the remaining points? Brute force
/// over all triangles for d=2.
inline bool inside_hull_of_others_2d(const std::vector<std::array<double, 2>>& pts,
                                     std::size_t which) {
  const auto& p = pts[which];
  const auto sign = [](const std::array<double, 2>& a, const std::array<double, 2>& b,
                       const std::array<double, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == which) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (j == which) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (k == which) continue;
        const double d1 = sign(pts[i], pts[j], p);
        const double d2 = sign(pts[j], pts[k], p);
        const double d3 = sign(pts[k], pts[i], p);
        const bool has_neg = d1 < -1e-12 || d2 < -1e-12 || d3 < -1e-12;
        const bool has_pos = d1 > 1e-12 || d2 > 1e-12 || d3 > 1e-12;
        if (!(has_neg && has_pos)) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
