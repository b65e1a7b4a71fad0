#pragma once

#include <span>
#include <vector>

#include "vandervolt/basis.hpp"
#include "vandervolt/dense_matrix.hpp"
#include "vandervolt/vandermonde.hpp"

namespace vandervolt {

/// Lagrange interpolant sum_i c_i phi_i.
struct Interpolant {
  BasisSequence basis;
  NodeSet nodes;
  std::vector<double> coefficients;
};

/// Coefficients solved through the Newton/LU route.
Interpolant fit(const BasisSequence& basis, const NodeSet& nodes,
                std::span<const double> values);

double evaluate(const Interpolant& p, std::span<const double> point);

/// Cardinal (Lagrange) basis: weights W = V^{-1}, so that
/// l_i(x) = sum_j W(i,j) phi_j(x) and l_i(x_j) = delta_ij.
class CardinalSet {
public:
  CardinalSet(BasisSequence basis, NodeSet nodes, DenseMatrix weights, double det_v);

  int size() const { return nodes_.size(); }
  const BasisSequence& basis() const { return basis_; }
  const NodeSet& nodes() const { return nodes_; }
  const DenseMatrix& weights() const { return weights_; }
  /// Signed determinant of the Vandermonde matrix behind the weights.
  double det_v() const { return det_v_; }

  /// [l_1(x), ..., l_n(x)].
  std::vector<double> values(std::span<const double> point) const;
  std::vector<double> values_from_basis(std::span<const double> basis_values) const;

  /// sum_i |l_i(x)|, the Lebesgue function.
  double abs_sum(std::span<const double> point) const;

private:
  BasisSequence basis_;
  NodeSet nodes_;
  DenseMatrix weights_;
  double det_v_;
};

CardinalSet cardinal_functions(const BasisSequence& basis, const NodeSet& nodes);

/// One-step enlargement by a new node and basis function, through the
/// rank-one cardinal update
///   l_{n+1}(x) = (phi(x) - sum_i l_i(x) phi(x_i)) / denom,
///   l_i(x)    <- l_i(x) - l_{n+1}(x) l_i(x_new),
/// where denom = phi(x_new) - sum_i l_i(x_new) phi(x_i). Throws
/// EnlargedSystemSingularError when denom vanishes (relative 1e-12).
CardinalSet add_node(const CardinalSet& card, std::span<const double> new_node,
                     const BasisFunction& new_phi);

/// det V_n * (phi_at_x - sum_i l_i(x) phi_at_nodes[i]): the bordered
/// (n+1) x (n+1) determinant whose last column holds basis values at x.
double schur_border_det(const CardinalSet& card, std::span<const double> new_phi_at_nodes,
                        double new_phi_at_x, std::span<const double> basis_at_x);

}  // namespace vandervolt
