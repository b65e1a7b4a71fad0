#include "vandervolt/basis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "vandervolt/errors.hpp"

namespace vandervolt {

std::string to_string(BasisFamily family) {
  return family == BasisFamily::Monomial ? "monomial" : "chebyshev";
}

double chebyshev_eval(int k, double x) {
  if (k < 0) throw DimensionError("Chebyshev degree must be >= 0");
  if (k == 0) return 1.0;
  if (k == 1) return x;
  double prev = 1.0;
  double cur = x;
  for (int j = 2; j <= k; ++j) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

double int_pow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double basis_eval(const BasisFunction& phi, std::span<const double> point) {
  if (phi.dimension() != static_cast<int>(point.size()))
    throw DimensionError("basis function / point dimension mismatch");
  double value = 1.0;
  for (int i = 0; i < phi.dimension(); ++i) {
    const int e = phi.index.exponents[static_cast<std::size_t>(i)];
    value *= phi.family == BasisFamily::Monomial ? int_pow(point[static_cast<std::size_t>(i)], e)
                                                 : chebyshev_eval(e, point[static_cast<std::size_t>(i)]);
  }
  return value;
}

BasisSequence::BasisSequence(int dimension, std::vector<BasisFunction> functions)
    : dimension_(dimension), functions_(std::move(functions)) {
  if (dimension_ < 1) throw DimensionError("basis dimension must be >= 1");
  std::set<std::pair<int, std::vector<int>>> seen;
  for (const auto& phi : functions_) {
    if (phi.dimension() != dimension_)
      throw DimensionError("basis function dimension differs from sequence dimension");
    if (!seen.emplace(static_cast<int>(phi.family), phi.index.exponents).second)
      throw DimensionError("duplicate basis function in sequence");
  }
}

BasisSequence BasisSequence::total_degree(BasisFamily family, int d, int k) {
  std::vector<BasisFunction> functions;
  for (auto& alpha : total_degree_indices(d, k))
    functions.emplace_back(family, std::move(alpha));
  return BasisSequence(d, std::move(functions));
}

BasisSequence BasisSequence::subset(std::span<const int> positions) const {
  std::vector<BasisFunction> picked;
  picked.reserve(positions.size());
  for (int p : positions) {
    if (p < 0 || p >= size()) throw DimensionError("basis subset position out of range");
    picked.push_back(functions_[static_cast<std::size_t>(p)]);
  }
  return BasisSequence(dimension_, std::move(picked));
}

bool BasisSequence::contains(const BasisFunction& phi) const {
  return std::find(functions_.begin(), functions_.end(), phi) != functions_.end();
}

std::vector<double> basis_eval_vector(const BasisSequence& sequence,
                                      std::span<const double> point) {
  if (!sequence.empty() && sequence.dimension() != static_cast<int>(point.size()))
    throw DimensionError("basis sequence / point dimension mismatch");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(sequence.size()));
  for (const auto& phi : sequence) values.push_back(basis_eval(phi, point));
  return values;
}

}  // namespace vandervolt
