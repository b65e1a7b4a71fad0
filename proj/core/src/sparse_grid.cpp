#include "vandervolt/sparse_grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "vandervolt/errors.hpp"

namespace vandervolt {

int level_count(int level) {
  if (level < 0) throw InvalidLevelError("level must be >= 0");
  if (level == 0) return 0;
  if (level == 1) return 1;
  return (1 << (level - 1)) + 1;
}

std::vector<double> cc_nodes(int k) {
  if (k < 1) throw InvalidLevelError("Clenshaw-Curtis level must be >= 1");
  if (k == 1) return {0.0};
  const int m = level_count(k);
  std::vector<double> nodes(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    double x;
    if (j == 1)
      x = -1.0;
    else if (j == m)
      x = 1.0;
    else if (2 * (j - 1) == m - 1)
      x = 0.0;
    else
      x = -std::cos(static_cast<double>(j - 1) * std::numbers::pi / static_cast<double>(m - 1));
    nodes[static_cast<std::size_t>(j - 1)] = x;
  }
  return nodes;
}

std::vector<MultiIndex> level_order(int level, int d) {
  if (level < 0) throw InvalidLevelError("level must be >= 0");
  auto betas = fixed_degree_indices(d, level);
  std::stable_sort(betas.begin(), betas.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.nonzero_count() < b.nonzero_count();
  });
  return betas;
}

namespace {

void check_dimension(int d) {
  if (d != 2 && d != 3)
    throw UnsupportedDimensionError("Smolyak construction supports d in {2,3}");
}

/// Appends the row-major tensor product over per-axis value lists, skipping
/// already-emitted points (1e-12 quantization).
void emit_tensor_nodes(const std::vector<std::vector<double>>& axes,
                       std::map<std::vector<long long>, bool>& seen,
                       std::vector<double>& coords) {
  const int d = static_cast<int>(axes.size());
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<double> point(static_cast<std::size_t>(d));
    std::vector<long long> key(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
      point[static_cast<std::size_t>(c)] = axes[static_cast<std::size_t>(c)][idx[static_cast<std::size_t>(c)]];
      key[static_cast<std::size_t>(c)] = std::llround(point[static_cast<std::size_t>(c)] * 1e12);
    }
    if (seen.emplace(std::move(key), true).second)
      coords.insert(coords.end(), point.begin(), point.end());
    int c = d - 1;
    while (c >= 0 && ++idx[static_cast<std::size_t>(c)] == axes[static_cast<std::size_t>(c)].size()) {
      idx[static_cast<std::size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
}

void emit_level_nodes(int d, int level, std::map<std::vector<long long>, bool>& seen,
                      std::vector<double>& coords) {
  for (const auto& beta : level_order(level, d)) {
    std::vector<std::vector<double>> axes;
    axes.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c)
      axes.push_back(cc_nodes(beta.exponents[static_cast<std::size_t>(c)] + 1));
    emit_tensor_nodes(axes, seen, coords);
  }
}

void emit_level_basis(int d, int level, std::vector<BasisFunction>& functions) {
  for (const auto& beta : level_order(level, d)) {
    std::vector<std::vector<int>> degree_axes;
    degree_axes.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
      const int b = beta.exponents[static_cast<std::size_t>(c)];
      std::vector<int> degrees;
      for (int deg = level_count(b); deg < level_count(b + 1); ++deg) degrees.push_back(deg);
      degree_axes.push_back(std::move(degrees));
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<int> exps(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c)
        exps[static_cast<std::size_t>(c)] =
            degree_axes[static_cast<std::size_t>(c)][idx[static_cast<std::size_t>(c)]];
      functions.emplace_back(BasisFamily::ChebyshevTensor, MultiIndex(std::move(exps)));
      int c = d - 1;
      while (c >= 0 &&
             ++idx[static_cast<std::size_t>(c)] == degree_axes[static_cast<std::size_t>(c)].size()) {
        idx[static_cast<std::size_t>(c)] = 0;
        --c;
      }
      if (c < 0) break;
    }
  }
}

int subgrid_cardinality(int d, int level) {
  std::map<std::vector<long long>, bool> seen;
  std::vector<double> coords;
  emit_level_nodes(d, level, seen, coords);
  return static_cast<int>(coords.size()) / d;
}

}  // namespace

SparseGridSequence smolyak_sequence(int d, int k) {
  check_dimension(d);
  if (k < 0) throw InvalidLevelError("Smolyak order must be >= 0");

  std::map<std::vector<long long>, bool> seen;
  std::vector<double> coords;
  for (int level = std::min(k, 2); level <= k; ++level) emit_level_nodes(d, level, seen, coords);

  std::vector<BasisFunction> functions;
  for (int level = 0; level <= k; ++level) emit_level_basis(d, level, functions);

  std::vector<int> offsets;
  offsets.reserve(static_cast<std::size_t>(k) + 1);
  for (int level = 0; level <= k; ++level) offsets.push_back(subgrid_cardinality(d, level));

  return SparseGridSequence{d, k, NodeSet(d, std::move(coords)),
                            BasisSequence(d, std::move(functions)), std::move(offsets)};
}

SparseGridSequence smolyak_grid(int d, int k) { return smolyak_sequence(d, k); }

SparseGridSequence smolyak_basis(int d, int k) { return smolyak_sequence(d, k); }

NodeSet incomplete_sequence(int d, int k) {
  if (k < 2)
    throw InvalidLevelError("incomplete grids need order >= 2 (grids below order 2 are not prefixes)");
  const auto fine = smolyak_sequence(d, k + 1);
  const int n_k = fine.level_offsets[static_cast<std::size_t>(k)];
  const auto all = fine.nodes.coords();
  std::vector<double> ring(all.begin() + static_cast<std::ptrdiff_t>(n_k) * d, all.end());
  return NodeSet(d, std::move(ring));
}

}  // namespace vandervolt
