#include "vandervolt/interpolant.hpp"

#include <cmath>
#include <utility>

#include "vandervolt/errors.hpp"
#include "vandervolt/linalg.hpp"

namespace vandervolt {

Interpolant fit(const BasisSequence& basis, const NodeSet& nodes,
                std::span<const double> values) {
  if (static_cast<int>(values.size()) != nodes.size())
    throw DimensionError("value count does not match node count");
  const auto newton = newton_factorize(basis, nodes);
  // solve() uses the original node order, so permute the data the same way.
  return Interpolant{basis, nodes, newton.solve(values)};
}

double evaluate(const Interpolant& p, std::span<const double> point) {
  const auto phi = basis_eval_vector(p.basis, point);
  double s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) s += p.coefficients[i] * phi[i];
  return s;
}

CardinalSet::CardinalSet(BasisSequence basis, NodeSet nodes, DenseMatrix weights, double det_v)
    : basis_(std::move(basis)), nodes_(std::move(nodes)), weights_(std::move(weights)), det_v_(det_v) {
  if (basis_.size() != nodes_.size() || weights_.rows() != nodes_.size() ||
      weights_.cols() != nodes_.size())
    throw DimensionError("cardinal set sizes are inconsistent");
}

std::vector<double> CardinalSet::values(std::span<const double> point) const {
  return matvec(weights_, basis_eval_vector(basis_, point));
}

std::vector<double> CardinalSet::values_from_basis(std::span<const double> basis_values) const {
  return matvec(weights_, basis_values);
}

double CardinalSet::abs_sum(std::span<const double> point) const {
  double s = 0.0;
  for (double v : values(point)) s += std::fabs(v);
  return s;
}

CardinalSet cardinal_functions(const BasisSequence& basis, const NodeSet& nodes) {
  const DenseMatrix v = build_square(basis, nodes);
  LUFactorization lu;
  try {
    lu = lu_factor(v);
  } catch (const SingularMatrixError& e) {
    throw SingularSystemError(std::string("Vandermonde system is singular: ") + e.what());
  }
  const int n = v.rows();
  DenseMatrix w(n, n);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    e[static_cast<std::size_t>(j)] = 1.0;
    auto col = lu.solve(e);
    e[static_cast<std::size_t>(j)] = 0.0;
    for (int i = 0; i < n; ++i) w(i, j) = col[static_cast<std::size_t>(i)];
  }
  return CardinalSet(basis, nodes, std::move(w), lu.det());
}

CardinalSet add_node(const CardinalSet& card, std::span<const double> new_node,
                     const BasisFunction& new_phi) {
  const int n = card.size();
  if (static_cast<int>(new_node.size()) != card.nodes().dimension())
    throw DimensionError("new node dimension mismatch");
  for (int i = 0; i < n; ++i)
    if (!points_distinct(card.nodes().point(i), new_node))
      throw InvalidNodeSetError("new node coincides with an existing node");
  if (card.basis().contains(new_phi))
    throw DimensionError("new basis function already present");

  std::vector<double> phi_at_nodes(static_cast<std::size_t>(n));
  double phi_scale = 1.0;
  for (int i = 0; i < n; ++i) {
    phi_at_nodes[static_cast<std::size_t>(i)] = basis_eval(new_phi, card.nodes().point(i));
    phi_scale = std::max(phi_scale, std::fabs(phi_at_nodes[static_cast<std::size_t>(i)]));
  }
  const double phi_at_new = basis_eval(new_phi, new_node);
  phi_scale = std::max(phi_scale, std::fabs(phi_at_new));

  const auto l_at_new = card.values(new_node);
  double denom = phi_at_new;
  for (int i = 0; i < n; ++i)
    denom -= l_at_new[static_cast<std::size_t>(i)] * phi_at_nodes[static_cast<std::size_t>(i)];
  if (std::fabs(denom) <= 1e-12 * phi_scale)
    throw EnlargedSystemSingularError("enlarged Vandermonde system is singular");

  // New weight rows in the enlarged basis (phi_1..phi_n, phi_{n+1}):
  //   row_{n+1} = (e_{n+1} - sum_i phi(x_i) [w_i, 0]) / denom
  //   row_i     = [w_i, 0] - l_i(x_new) row_{n+1}
  const DenseMatrix& w = card.weights();
  DenseMatrix w1(n + 1, n + 1);
  std::vector<double> last(static_cast<std::size_t>(n + 1), 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += phi_at_nodes[static_cast<std::size_t>(i)] * w(i, j);
    last[static_cast<std::size_t>(j)] = -s / denom;
  }
  last[static_cast<std::size_t>(n)] = 1.0 / denom;
  for (int j = 0; j <= n; ++j) w1(n, j) = last[static_cast<std::size_t>(j)];
  for (int i = 0; i < n; ++i) {
    const double li = l_at_new[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) w1(i, j) = w(i, j) - li * last[static_cast<std::size_t>(j)];
    w1(i, n) = -li * last[static_cast<std::size_t>(n)];
  }

  std::vector<BasisFunction> funcs = card.basis().functions();
  funcs.push_back(new_phi);
  BasisSequence basis1(card.basis().dimension(), std::move(funcs));
  NodeSet nodes1 = card.nodes().with_point(new_node);
  // Schur's identity: det V_{n+1} = det V_n * denom.
  return CardinalSet(std::move(basis1), std::move(nodes1), std::move(w1), card.det_v() * denom);
}

double schur_border_det(const CardinalSet& card, std::span<const double> new_phi_at_nodes,
                        double new_phi_at_x, std::span<const double> basis_at_x) {
  const int n = card.size();
  if (static_cast<int>(new_phi_at_nodes.size()) != n || static_cast<int>(basis_at_x.size()) != n)
    throw DimensionError("border vectors must have length n");
  const auto l_at_x = card.values_from_basis(basis_at_x);
  double s = new_phi_at_x;
  for (int i = 0; i < n; ++i)
    s -= l_at_x[static_cast<std::size_t>(i)] * new_phi_at_nodes[static_cast<std::size_t>(i)];
  return card.det_v() * s;
}

}  // namespace vandervolt
