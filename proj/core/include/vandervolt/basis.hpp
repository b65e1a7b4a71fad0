#pragma once

#include <span>
#include <string>
#include <vector>

#include "vandervolt/multi_index.hpp"

namespace vandervolt {

enum class BasisFamily { Monomial, ChebyshevTensor };

std::string to_string(BasisFamily family);

/// Chebyshev polynomial of the first kind, T_k(x), by the three-term
/// recursion T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}. The recursion
/// (rather than cos(k acos x)) keeps values polynomial-exact for |x| > 1.
double chebyshev_eval(int k, double x);

/// One tensor-product basis function: x^alpha for Monomial, or
/// prod_i T_{alpha_i}(x_i) for ChebyshevTensor.
struct BasisFunction {
  BasisFamily family = BasisFamily::Monomial;
  MultiIndex index;

  BasisFunction() = default;
  BasisFunction(BasisFamily f, MultiIndex i) : family(f), index(std::move(i)) {}

  int dimension() const { return index.dimension(); }

  friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

double basis_eval(const BasisFunction& phi, std::span<const double> point);

/// Ordered, duplicate-free sequence of basis functions sharing one dimension.
class BasisSequence {
public:
  BasisSequence(int dimension, std::vector<BasisFunction> functions);

  /// All functions of one family with total degree <= k, in the
  /// total_degree_indices order.
  static BasisSequence total_degree(BasisFamily family, int d, int k);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(functions_.size()); }
  bool empty() const { return functions_.empty(); }

  const BasisFunction& operator[](int i) const { return functions_[static_cast<std::size_t>(i)]; }
  const std::vector<BasisFunction>& functions() const { return functions_; }

  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }

  /// New sequence keeping the given 0-based positions, in the given order.
  BasisSequence subset(std::span<const int> positions) const;

  bool contains(const BasisFunction& phi) const;

private:
  int dimension_;
  std::vector<BasisFunction> functions_;
};

/// Entry i is basis_eval(sequence[i], point).
std::vector<double> basis_eval_vector(const BasisSequence& sequence,
                                      std::span<const double> point);

}  // namespace vandervolt
