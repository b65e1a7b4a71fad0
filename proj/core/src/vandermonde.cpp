#include "vandervolt/vandermonde.hpp"

#include <cmath>
#include <utility>

#include "vandervolt/errors.hpp"
#include "vandervolt/linalg.hpp"

namespace vandervolt {

bool points_distinct(std::span<const double> a, std::span<const double> b, double tolerance) {
  double dist = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dist = std::max(dist, std::fabs(a[i] - b[i]));
  return dist > tolerance;
}

NodeSet::NodeSet(int dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
  if (dimension_ < 1) throw InvalidNodeSetError("node dimension must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dimension_) != 0)
    throw InvalidNodeSetError("coordinate count is not a positive multiple of the dimension");
  for (double v : coords_)
    if (!std::isfinite(v)) throw InvalidNodeSetError("node coordinates must be finite");
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!points_distinct(point(i), point(j)))
        throw InvalidNodeSetError("nodes must be mutually distinct");
}

NodeSet NodeSet::prefix(int count) const {
  if (count < 1 || count > size()) throw InvalidNodeSetError("prefix length out of range");
  return NodeSet(dimension_,
                 std::vector<double>(coords_.begin(),
                                     coords_.begin() + static_cast<std::size_t>(count) * dimension_));
}

NodeSet NodeSet::reordered(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != size())
    throw InvalidNodeSetError("reorder permutation length mismatch");
  std::vector<double> out;
  out.reserve(coords_.size());
  for (int idx : order) {
    auto p = point(idx);
    out.insert(out.end(), p.begin(), p.end());
  }
  return NodeSet(dimension_, std::move(out));
}

NodeSet NodeSet::with_point(std::span<const double> p) const {
  if (static_cast<int>(p.size()) != dimension_)
    throw InvalidNodeSetError("appended node has wrong dimension");
  std::vector<double> out = coords_;
  out.insert(out.end(), p.begin(), p.end());
  return NodeSet(dimension_, std::move(out));
}

DenseMatrix build_generalized(const BasisSequence& trial, const NodeSet& nodes) {
  if (trial.dimension() != nodes.dimension())
    throw DimensionError("trial basis / node dimension mismatch");
  const int m = trial.size();
  const int n = nodes.size();
  if (m < n)
    throw InsufficientTrialBasisError("trial basis smaller than the node set");
  DenseMatrix v(m, n);
  for (int j = 0; j < n; ++j) {
    auto x = nodes.point(j);
    for (int i = 0; i < m; ++i) v(i, j) = basis_eval(trial[i], x);
  }
  return v;
}

DenseMatrix build_square(const BasisSequence& basis, const NodeSet& nodes) {
  if (basis.size() != nodes.size())
    throw DimensionError("square Vandermonde needs #basis == #nodes");
  return build_generalized(basis, nodes);
}

NewtonForm::NewtonForm(BasisSequence basis, NodeSet reordered_nodes, DenseMatrix change_of_basis,
                       DenseMatrix lower_factor, std::vector<int> permutation, int sign)
    : basis_(std::move(basis)),
      reordered_nodes_(std::move(reordered_nodes)),
      change_of_basis_(std::move(change_of_basis)),
      lower_factor_(std::move(lower_factor)),
      permutation_(std::move(permutation)),
      sign_(sign) {}

double NewtonForm::det() const {
  double d = static_cast<double>(sign_);
  for (int i = 0; i < change_of_basis_.rows(); ++i) d *= change_of_basis_(i, i);
  return d;
}

std::vector<double> NewtonForm::solve(std::span<const double> values) const {
  const int n = lower_factor_.rows();
  if (static_cast<int>(values.size()) != n)
    throw DimensionError("value count does not match node count");
  std::vector<double> pf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pf[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(permutation_[static_cast<std::size_t>(i)])];
  auto t = solve_unit_lower(lower_factor_, pf);
  // U c = t, with U stored transposed: back substitution over columns of U^T.
  std::vector<double> c(t);
  for (int i = n - 1; i >= 0; --i) {
    double s = c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= change_of_basis_(j, i) * c[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(i)] = s / change_of_basis_(i, i);
  }
  return c;
}

std::vector<double> NewtonForm::newton_values(std::span<const double> point) const {
  // U^T p = phi(x); U^T is lower triangular.
  auto phi = basis_eval_vector(basis_, point);
  return solve_lower(change_of_basis_, phi);
}

NewtonForm newton_factorize(const BasisSequence& basis, const NodeSet& nodes) {
  const DenseMatrix vt = build_square(basis, nodes).transposed();
  LUFactorization lu;
  try {
    lu = lu_factor(vt);
  } catch (const SingularMatrixError& e) {
    throw SingularSystemError(std::string("Vandermonde system is singular: ") + e.what());
  }
  NodeSet reordered = nodes.reordered(lu.permutation);
  return NewtonForm(basis, std::move(reordered), lu.upper.transposed(), std::move(lu.lower),
                    std::move(lu.permutation), lu.sign);
}

}  // namespace vandervolt
