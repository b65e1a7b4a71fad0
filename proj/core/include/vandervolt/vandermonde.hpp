#pragma once

#include <span>
#include <vector>

#include "vandervolt/basis.hpp"
#include "vandervolt/dense_matrix.hpp"

namespace vandervolt {

/// Ordered set of mutually distinct interpolation nodes in R^d.
/// Distinctness means pairwise max-norm distance > 1e-14.
class NodeSet {
public:
  static constexpr double kDistinctTolerance = 1e-14;

  /// coords is row-major, size() * dimension entries.
  NodeSet(int dimension, std::vector<double> coords);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(coords_.size()) / dimension_; }

  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }

  std::span<const double> coords() const { return coords_; }

  /// First count nodes.
  NodeSet prefix(int count) const;

  /// Nodes re-ordered so that position i holds point(order[i]).
  NodeSet reordered(std::span<const int> order) const;

  /// This set plus one extra node (validated against the existing ones).
  NodeSet with_point(std::span<const double> p) const;

private:
  int dimension_;
  std::vector<double> coords_;
};

bool points_distinct(std::span<const double> a, std::span<const double> b,
                     double tolerance = NodeSet::kDistinctTolerance);

/// Generalized Vandermonde matrix: entry (i,j) = trial[i](nodes[j]),
/// trial size m >= node count n.
DenseMatrix build_generalized(const BasisSequence& trial, const NodeSet& nodes);

/// Square Vandermonde matrix, #basis == #nodes.
DenseMatrix build_square(const BasisSequence& basis, const NodeSet& nodes);

/// LU factorization of the transposed Vandermonde matrix, giving the Newton
/// basis: phi(x) = change_of_basis * p(x) with p_i vanishing at the first
/// i-1 reordered nodes and p_i(reordered node i) = 1.
class NewtonForm {
public:
  NewtonForm(BasisSequence basis, NodeSet reordered_nodes, DenseMatrix change_of_basis,
             DenseMatrix lower_factor, std::vector<int> permutation, int sign);

  const BasisSequence& basis() const { return basis_; }
  const NodeSet& reordered_nodes() const { return reordered_nodes_; }
  /// U^T of the pivoted LU of V^T; lower triangular.
  const DenseMatrix& change_of_basis() const { return change_of_basis_; }
  const DenseMatrix& lower_factor() const { return lower_factor_; }
  const std::vector<int>& permutation() const { return permutation_; }

  /// det V (= det V^T) from the triangular factors.
  double det() const;

  /// Coefficients of the interpolant of the given node values:
  /// L t = P f, then U c = t.
  std::vector<double> solve(std::span<const double> values) const;

  /// Newton basis values [p_1(x), ..., p_n(x)].
  std::vector<double> newton_values(std::span<const double> point) const;

private:
  BasisSequence basis_;
  NodeSet reordered_nodes_;
  DenseMatrix change_of_basis_;
  DenseMatrix lower_factor_;
  std::vector<int> permutation_;
  int sign_;
};

NewtonForm newton_factorize(const BasisSequence& basis, const NodeSet& nodes);

}  // namespace vandervolt
