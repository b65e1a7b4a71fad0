#pragma once

#include <vector>

#include "vandervolt/hull_mesh.hpp"
#include "vandervolt/interpolant.hpp"

namespace vandervolt {

/// Discrete Lebesgue constant of a cardinal set plus the two analytic bounds
/// and the constants entering them.
struct LebesgueReport {
  double lambda_discrete = 0.0;
  std::vector<double> argmax_vertex;
  double bound_sv = 0.0;
  double bound_det = 0.0;
  double constant_c = 0.0;
  double constant_d = 0.0;
  int n = 0;
  double sigma_min = 0.0;
  double abs_det = 0.0;
};

/// max over mesh vertices of sum_i |l_i(y)|; fills only the lambda fields.
/// Vertex sums are computed in parallel; the reduction is deterministic
/// (largest value, lowest vertex index on ties).
LebesgueReport lebesgue_discrete(const CardinalSet& card, const ConvexHullMesh& mesh);

/// C = max over mesh vertices of (sum_i phi_i(y)^2)^{1/2}.
double lebesgue_C(const BasisSequence& basis, const ConvexHullMesh& mesh);

/// D from the row-wise and column-wise squared sums of the square
/// Vandermonde matrix: the inverse of the larger of
/// sqrt(min_i rowsum_i / prod_i rowsum_i) and the column analogue.
double lebesgue_D(const DenseMatrix& v);

/// C n / sigma_min(V); +infinity when sigma_min is below the dismissal
/// threshold.
double bound_sv(const CardinalSet& card, const ConvexHullMesh& mesh);

/// C D sqrt(e) n / |det V|; +infinity when det V == 0.
double bound_det(const CardinalSet& card, const ConvexHullMesh& mesh);

/// lambda_n + new_cardinal_sup * (1 + lambda_n): the one-node-addition bound.
double bound_incremental(double lambda_n, double new_cardinal_sup);

/// |det V_n / det V_{n+1}| * phi_sup * (1 + lambda_n): the determinant-ratio
/// bound on the new cardinal function's sup norm.
double incremental_cardinal_sup_bound(double det_n, double det_n1, double phi_sup,
                                      double lambda_n);

/// lebesgue_discrete plus both bounds and their constants.
LebesgueReport lebesgue_report(const CardinalSet& card, const ConvexHullMesh& mesh);

}  // namespace vandervolt
