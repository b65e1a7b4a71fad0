#include "vandervolt/multi_index.hpp"

#include "vandervolt/errors.hpp"

namespace vandervolt {

namespace {

void emit_fixed_degree(int d, int degree, std::vector<int>& prefix,
                       std::vector<MultiIndex>& out) {
  if (d == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    emit_fixed_degree(d - 1, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> fixed_degree_indices(int d, int degree) {
  if (d < 1) throw DimensionError("multi-index dimension must be >= 1");
  if (degree < 0) throw DimensionError("total degree must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(d));
  emit_fixed_degree(d, degree, prefix, out);
  return out;
}

std::vector<MultiIndex> total_degree_indices(int d, int k) {
  if (d < 1) throw DimensionError("multi-index dimension must be >= 1");
  if (k < 0) throw DimensionError("total degree bound must be >= 0");
  std::vector<MultiIndex> out;
  for (int degree = 0; degree <= k; ++degree) {
    auto group = fixed_degree_indices(d, degree);
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

}  // namespace vandervolt
