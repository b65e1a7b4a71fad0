#include "vandervolt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "vandervolt/errors.hpp"
#include "vandervolt/interpolant.hpp"
#include "vandervolt/io.hpp"
#include "vandervolt/linalg.hpp"
#include "vandervolt/parallel.hpp"
#include "vandervolt/prng.hpp"
#include "vandervolt/sparse_grid.hpp"

namespace vandervolt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Trial-basis values at every mesh vertex, one row per basis function.
DenseMatrix eval_basis_at_vertices(const BasisSequence& basis, const ConvexHullMesh& mesh) {
  DenseMatrix phi(basis.size(), mesh.vertex_count());
  for (int j = 0; j < mesh.vertex_count(); ++j) {
    const auto column = basis_eval_vector(basis, mesh.vertex(j));
    for (int i = 0; i < basis.size(); ++i) phi(i, j) = column[static_cast<std::size_t>(i)];
  }
  return phi;
}

/// Discrete Lebesgue constant of the square system made of the given trial
/// rows, evaluated on precomputed basis values. +infinity on a structurally
/// singular submatrix.
double lambda_for_rows(const DenseMatrix& phi, const DenseMatrix& v, std::span<const int> rows) {
  DenseMatrix w;
  try {
    w = inverse(v.select_rows(rows));
  } catch (const SingularMatrixError&) {
    return kInf;
  }
  const DenseMatrix cardinal = matmul(w, phi.select_rows(rows));
  double lambda = 0.0;
  for (int j = 0; j < cardinal.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < cardinal.rows(); ++i) s += std::fabs(cardinal(i, j));
    lambda = std::max(lambda, s);
  }
  return lambda;
}

double finite_abs_diff(double a, double b) {
  const double d = std::fabs(a - b);
  return std::isfinite(d) ? d : kInf;
}

NodeSet draw_nodes(Xorshift64Star& rng, int d, int n) {
  while (true) {
    std::vector<double> coords(static_cast<std::size_t>(n) * d);
    for (double& c : coords) c = rng.next_double();
    try {
      return NodeSet(d, std::move(coords));
    } catch (const InvalidNodeSetError&) {
      // Coincident draw; take the next block of the stream.
    }
  }
}

NodeSet cube_corners(int d) {
  const int count = 1 << d;
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(count) * d);
  for (int mask = 0; mask < count; ++mask)
    for (int c = 0; c < d; ++c) coords.push_back((mask >> c) & 1 ? 1.0 : -1.0);
  return NodeSet(d, std::move(coords));
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

void ExperimentConfig::validate() const {
  if (d != 2 && d != 3) throw DimensionError("experiments support d in {2,3}");
  if (trials < 1) throw DimensionError("trials must be >= 1");
  if (!(mesh_measure > 0.0)) throw DimensionError("mesh_measure must be positive");
  if (tol < 0.0) throw DimensionError("tol must be >= 0");
  if (n < 1) throw DimensionError("n must be >= 1");
  if (k < 0) throw DimensionError("k must be >= 0");
  if (degree < 0) throw DimensionError("degree must be >= 0");
}

void DiffHistogram::add(double diff) {
  if (!(diff >= 0.0)) return;
  const int bin = diff >= kUpper ? kBins : static_cast<int>(diff / kBinWidth);
  ++counts[static_cast<std::size_t>(std::min(bin, kBins))];
}

RandomNodesResult run_random_nodes(const ExperimentConfig& config) {
  config.validate();
  const BasisSequence trial = BasisSequence::total_degree(BasisFamily::Monomial, config.d, config.degree);
  if (trial.size() < config.n)
    throw InsufficientTrialBasisError("trial basis smaller than n; raise --degree");
  if (combination_count(trial.size(), config.n) > UINT64_C(1000000))
    throw EnumerationTooLargeError("subset enumeration exceeds the 1e6 guard; lower --n or --degree");

  const int trials = config.effective_trials();
  RandomNodesResult result;
  result.records.assign(static_cast<std::size_t>(trials), TrialRecord{});

  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    TrialRecord& rec = result.records[t];
    rec.trial = t;

    auto rng = substream(config.seed, t);
    const NodeSet nodes = draw_nodes(rng, config.d, config.n);

    ConvexHullMesh mesh;
    try {
      mesh = convex_hull_mesh(nodes, config.mesh_measure);
    } catch (const DegenerateHullError&) {
      rec.dismissed = true;
      rec.lambda_best = rec.lambda_maxvol = rec.lambda_maxminsv = kInf;
      rec.diff_a = rec.diff_b = rec.diff_c = kInf;
      return;
    }

    const DenseMatrix v = build_generalized(trial, nodes);
    const DenseMatrix phi = eval_basis_at_vertices(trial, mesh);

    SelectedBasis sel_mv;
    if (config.method == SelectionMethod::MaxVolIterative) {
      try {
        sel_mv = maxvol_rows(v, config.tol);
      } catch (const MaxVolConvergenceError& e) {
        sel_mv.row_indices = e.last_rows();
        sel_mv.method = SelectionMethod::MaxVolIterative;
        sel_mv.dismissed = false;
      }
    } else {
      sel_mv = exhaustive_maxvol(v);
    }
    const SelectedBasis sel_msv = exhaustive_maxminsv(v);
    rec.dismissed = sel_mv.dismissed || sel_msv.dismissed;

    double best = kInf;
    for_each_combination(v.rows(), v.cols(), [&](std::span<const int> combo) {
      const auto spectrum = singular_values(v.select_rows(combo));
      if (near_singular(0.0, spectrum.sigma_min(), spectrum.sigma_max())) return;
      best = std::min(best, lambda_for_rows(phi, v, combo));
    });
    rec.lambda_best = best;
    if (!std::isfinite(best)) rec.dismissed = true;

    rec.lambda_maxvol = lambda_for_rows(phi, v, sel_mv.row_indices);
    rec.lambda_maxminsv = lambda_for_rows(phi, v, sel_msv.row_indices);
    rec.diff_a = finite_abs_diff(rec.lambda_best, rec.lambda_maxvol);
    rec.diff_b = finite_abs_diff(rec.lambda_best, rec.lambda_maxminsv);
    rec.diff_c = finite_abs_diff(rec.lambda_maxvol, rec.lambda_maxminsv);
  });

  for (const TrialRecord& rec : result.records) {
    if (rec.dismissed) {
      ++result.dismissed_count;
      continue;
    }
    result.hist_a.add(rec.diff_a);
    result.hist_b.add(rec.diff_b);
    result.hist_c.add(rec.diff_c);
  }
  return result;
}

IncompleteGridResult run_incomplete_grid(const ExperimentConfig& config) {
  config.validate();
  if (config.k < 2 || config.k > 3)
    throw InvalidLevelError("incomplete-grid experiment supports k in {2,3}");

  const auto fine = smolyak_sequence(config.d, config.k + 1);
  const int n_k = fine.level_offsets[static_cast<std::size_t>(config.k)];
  const int n_k1 = fine.size();

  const ConvexHullMesh mesh = convex_hull_mesh(cube_corners(config.d), config.mesh_measure);
  const DenseMatrix phi = eval_basis_at_vertices(fine.basis, mesh);

  IncompleteGridResult result;
  result.points.assign(static_cast<std::size_t>(n_k1 - n_k + 1), CurvePoint{});

  parallel_for(result.points.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx);
    const int cardinality = n_k + i;
    CurvePoint& point = result.points[idx];
    point.cardinality = cardinality;

    const NodeSet nodes = fine.nodes.prefix(cardinality);
    const DenseMatrix v = build_generalized(fine.basis, nodes);

    std::vector<int> rows;
    if (cardinality == n_k || cardinality == n_k1) {
      // Complete grids use their own Smolyak basis, which is a prefix of the
      // order-(k+1) basis.
      point.complete = true;
      rows.resize(static_cast<std::size_t>(cardinality));
      for (int r = 0; r < cardinality; ++r) rows[static_cast<std::size_t>(r)] = r;
    } else {
      try {
        rows = maxvol_rows(v, config.tol).row_indices;
      } catch (const MaxVolConvergenceError& e) {
        rows = e.last_rows();
        point.converged = false;
      }
    }
    point.lambda = lambda_for_rows(phi, v, rows);
  });

  return result;
}

SelectBasisOutcome select_basis_run(const NodeSet& nodes, const BasisSequence& trial,
                                    SelectionMethod method, double tol,
                                    const std::vector<double>* values) {
  const DenseMatrix v = build_generalized(trial, nodes);
  SelectedBasis selection;
  switch (method) {
    case SelectionMethod::MaxVolIterative: selection = maxvol_rows(v, tol); break;
    case SelectionMethod::MaxVolExhaustive: selection = exhaustive_maxvol(v); break;
    case SelectionMethod::MaxMinSvExhaustive: selection = exhaustive_maxminsv(v); break;
  }
  SelectBasisOutcome outcome{selection, trial.subset(selection.row_indices), std::nullopt};
  if (values != nullptr && !selection.dismissed)
    outcome.coefficients = fit(outcome.basis, nodes, *values).coefficients;
  return outcome;
}

std::string select_basis_json(const SelectBasisOutcome& outcome) {
  nlohmann::json j;
  j["method"] = to_string(outcome.selection.method);
  std::vector<int> one_based;
  for (int r : outcome.selection.row_indices) one_based.push_back(r + 1);
  j["row_indices"] = one_based;
  j["abs_det"] = json_number(outcome.selection.volume);
  j["sigma_min"] = json_number(outcome.selection.sigma_min);
  j["dismissed"] = outcome.selection.dismissed;
  if (outcome.coefficients) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (double c : *outcome.coefficients) coeffs.push_back(json_number(c));
    j["coefficients"] = coeffs;
  }
  return j.dump(2) + "\n";
}

std::string lebesgue_report_json(const LebesgueReport& report) {
  nlohmann::json j;
  j["lambda"] = json_number(report.lambda_discrete);
  j["argmax_vertex"] = report.argmax_vertex;
  j["bound_sv"] = json_number(report.bound_sv);
  j["bound_det"] = json_number(report.bound_det);
  j["constants"] = {{"C", json_number(report.constant_c)},
                    {"D", json_number(report.constant_d)},
                    {"n", report.n},
                    {"sigma_min", json_number(report.sigma_min)},
                    {"abs_det", json_number(report.abs_det)}};
  return j.dump(2) + "\n";
}

std::string trial_records_csv(const RandomNodesResult& result) {
  std::ostringstream out;
  out << "trial,lambda_best,lambda_maxvol,lambda_maxminsv,diff_a,diff_b,diff_c,dismissed\n";
  for (const TrialRecord& r : result.records) {
    out << r.trial << ',' << format_double(r.lambda_best) << ',' << format_double(r.lambda_maxvol)
        << ',' << format_double(r.lambda_maxminsv) << ',' << format_double(r.diff_a) << ','
        << format_double(r.diff_b) << ',' << format_double(r.diff_c) << ',' << (r.dismissed ? 1 : 0)
        << '\n';
  }
  return out.str();
}

std::string histograms_csv(const RandomNodesResult& result) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count_a,count_b,count_c\n";
  for (int b = 0; b <= DiffHistogram::kBins; ++b) {
    const double lo = b * DiffHistogram::kBinWidth;
    out << format_double(lo) << ',';
    if (b == DiffHistogram::kBins)
      out << "inf";
    else
      out << format_double(lo + DiffHistogram::kBinWidth);
    out << ',' << result.hist_a.counts[static_cast<std::size_t>(b)] << ','
        << result.hist_b.counts[static_cast<std::size_t>(b)] << ','
        << result.hist_c.counts[static_cast<std::size_t>(b)] << '\n';
  }
  return out.str();
}

std::string curve_csv(const IncompleteGridResult& result) {
  std::ostringstream out;
  out << "cardinality,lambda,selection,converged\n";
  for (const CurvePoint& p : result.points)
    out << p.cardinality << ',' << format_double(p.lambda) << ','
        << (p.complete ? "complete" : "maxvol") << ',' << (p.converged ? 1 : 0) << '\n';
  return out.str();
}

std::string nodes_csv(const NodeSet& nodes) {
  std::ostringstream out;
  for (int i = 0; i < nodes.size(); ++i) {
    const auto p = nodes.point(i);
    for (int c = 0; c < nodes.dimension(); ++c) {
      if (c) out << ',';
      out << format_double(p[static_cast<std::size_t>(c)]);
    }
    out << '\n';
  }
  return out.str();
}

std::string basis_table(const BasisSequence& basis) {
  std::ostringstream out;
  out << "index\tfamily\texponents\n";
  for (int i = 0; i < basis.size(); ++i) {
    const BasisFunction& phi = basis[i];
    out << (i + 1) << '\t' << to_string(phi.family) << "\t(";
    for (int c = 0; c < phi.dimension(); ++c) {
      if (c) out << ',';
      out << phi.index.exponents[static_cast<std::size_t>(c)];
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace vandervolt
