#include "vandervolt/lebesgue.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "vandervolt/errors.hpp"
#include "vandervolt/linalg.hpp"
#include "vandervolt/parallel.hpp"
#include "vandervolt/selection.hpp"

namespace vandervolt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

LebesgueReport lebesgue_discrete(const CardinalSet& card, const ConvexHullMesh& mesh) {
  const std::size_t nv = static_cast<std::size_t>(mesh.vertex_count());
  std::vector<double> sums(nv, 0.0);
  parallel_for(nv, [&](std::size_t j) {
    sums[j] = card.abs_sum(mesh.vertex(static_cast<int>(j)));
  });

  std::size_t argmax = 0;
  for (std::size_t j = 1; j < nv; ++j)
    if (sums[j] > sums[argmax]) argmax = j;

  LebesgueReport report;
  report.lambda_discrete = nv == 0 ? 0.0 : sums[argmax];
  auto v = mesh.vertex(static_cast<int>(argmax));
  report.argmax_vertex.assign(v.begin(), v.end());
  report.n = card.size();
  return report;
}

double lebesgue_C(const BasisSequence& basis, const ConvexHullMesh& mesh) {
  double best = 0.0;
  for (int j = 0; j < mesh.vertex_count(); ++j) {
    double s = 0.0;
    for (double phi : basis_eval_vector(basis, mesh.vertex(j))) s += phi * phi;
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

double lebesgue_D(const DenseMatrix& v) {
  const int n = v.rows();
  double row_min = kInf, row_prod = 1.0;
  double col_min = kInf, col_prod = 1.0;
  for (int i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (int j = 0; j < n; ++j) {
      rs += v(i, j) * v(i, j);
      cs += v(j, i) * v(j, i);
    }
    row_min = std::min(row_min, rs);
    row_prod *= rs;
    col_min = std::min(col_min, cs);
    col_prod *= cs;
  }
  const double row_root = std::sqrt(row_min / row_prod);
  const double col_root = std::sqrt(col_min / col_prod);
  return 1.0 / std::max(row_root, col_root);
}

double bound_sv(const CardinalSet& card, const ConvexHullMesh& mesh) {
  const DenseMatrix v = build_square(card.basis(), card.nodes());
  const auto spectrum = singular_values(v);
  if (near_singular(std::fabs(card.det_v()), spectrum.sigma_min(), spectrum.sigma_max()))
    return kInf;
  const double c = lebesgue_C(card.basis(), mesh);
  return c * static_cast<double>(card.size()) / spectrum.sigma_min();
}

double bound_det(const CardinalSet& card, const ConvexHullMesh& mesh) {
  const double abs_det = std::fabs(card.det_v());
  if (abs_det == 0.0) return kInf;
  const DenseMatrix v = build_square(card.basis(), card.nodes());
  const double c = lebesgue_C(card.basis(), mesh);
  const double d = lebesgue_D(v);
  return c * d * std::sqrt(std::numbers::e) * static_cast<double>(card.size()) / abs_det;
}

double bound_incremental(double lambda_n, double new_cardinal_sup) {
  return lambda_n + new_cardinal_sup * (1.0 + lambda_n);
}

double incremental_cardinal_sup_bound(double det_n, double det_n1, double phi_sup,
                                      double lambda_n) {
  if (det_n1 == 0.0) return kInf;
  return std::fabs(det_n / det_n1) * phi_sup * (1.0 + lambda_n);
}

LebesgueReport lebesgue_report(const CardinalSet& card, const ConvexHullMesh& mesh) {
  LebesgueReport report = lebesgue_discrete(card, mesh);
  const DenseMatrix v = build_square(card.basis(), card.nodes());
  const auto spectrum = singular_values(v);
  report.constant_c = lebesgue_C(card.basis(), mesh);
  report.constant_d = lebesgue_D(v);
  report.sigma_min = spectrum.sigma_min();
  report.abs_det = std::fabs(card.det_v());
  report.bound_sv = near_singular(report.abs_det, spectrum.sigma_min(), spectrum.sigma_max())
                        ? kInf
                        : report.constant_c * static_cast<double>(card.size()) / spectrum.sigma_min();
  report.bound_det = report.abs_det == 0.0
                         ? kInf
                         : report.constant_c * report.constant_d * std::sqrt(std::numbers::e) *
                               static_cast<double>(card.size()) / report.abs_det;
  return report;
}

}  // namespace vandervolt
