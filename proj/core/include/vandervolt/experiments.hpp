#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vandervolt/basis.hpp"
#include "vandervolt/lebesgue.hpp"
#include "vandervolt/selection.hpp"
#include "vandervolt/vandermonde.hpp"

namespace vandervolt {

enum class ExperimentKind { RandomNodes, IncompleteGrid, SelectBasis, Lebesgue, SparseGridDump };

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::RandomNodes;
  int d = 2;
  int n = 4;
  int k = 2;
  int degree = 2;
  int trials = 1000;
  std::uint64_t seed = 1;
  double tol = 0.01;
  double mesh_measure = 1e-2;
  std::string output_path;
  bool full = false;
  SelectionMethod method = SelectionMethod::MaxVolExhaustive;

  /// full restores the 10000-trial scale; the default stays desk sized.
  int effective_trials() const { return full ? 10000 : trials; }

  void validate() const;
};

/// One random-nodes trial: Lebesgue constants of the best, MaxVol and
/// MaxMinSv bases plus their pairwise differences.
struct TrialRecord {
  std::uint64_t trial = 0;
  double lambda_best = 0.0;
  double lambda_maxvol = 0.0;
  double lambda_maxminsv = 0.0;
  double diff_a = 0.0;  // |best - maxvol|
  double diff_b = 0.0;  // |best - maxminsv|
  double diff_c = 0.0;  // |maxvol - maxminsv|
  bool dismissed = false;
};

/// Fixed-width histogram: 100 bins of width 0.05 on [0,5) plus an overflow bin.
struct DiffHistogram {
  static constexpr double kBinWidth = 0.05;
  static constexpr double kUpper = 5.0;
  static constexpr int kBins = 100;

  std::array<std::uint64_t, kBins + 1> counts{};

  void add(double diff);
};

struct RandomNodesResult {
  std::vector<TrialRecord> records;
  DiffHistogram hist_a, hist_b, hist_c;
  int dismissed_count = 0;
};

/// Cases (i)-(iii): per trial, n uniform random nodes in [0,1]^d, monomial
/// trial basis of the given total degree, exhaustive best/MaxVol/MaxMinSv
/// subsets and their discrete Lebesgue constants over the meshed hull.
/// Trials run in parallel on derived substreams; records are in trial order.
RandomNodesResult run_random_nodes(const ExperimentConfig& config);

struct CurvePoint {
  int cardinality = 0;
  double lambda = 0.0;
  bool complete = false;   // true at the two complete-grid endpoints
  bool converged = true;   // false when MaxVol hit its swap cap
};

struct IncompleteGridResult {
  std::vector<CurvePoint> points;
};

/// Cases (iv)-(v): Lebesgue constants of the incomplete grids between the
/// complete Smolyak grids of orders k and k+1, over the meshed cube
/// [-1,1]^d. Interior points select a basis by iterative MaxVol over the
/// order-(k+1) trial basis; the endpoints are the complete-grid rules.
IncompleteGridResult run_incomplete_grid(const ExperimentConfig& config);

struct SelectBasisOutcome {
  SelectedBasis selection;
  BasisSequence basis;  // the selected n functions, in trial order
  std::optional<std::vector<double>> coefficients;
};

/// Selects a basis for the given nodes out of the trial sequence with the
/// requested method; with values given, also fits the interpolant.
SelectBasisOutcome select_basis_run(const NodeSet& nodes, const BasisSequence& trial,
                                    SelectionMethod method, double tol,
                                    const std::vector<double>* values);

// ---- serialization ----------------------------------------------------------

std::string select_basis_json(const SelectBasisOutcome& outcome);
std::string lebesgue_report_json(const LebesgueReport& report);
std::string trial_records_csv(const RandomNodesResult& result);
std::string histograms_csv(const RandomNodesResult& result);
std::string curve_csv(const IncompleteGridResult& result);
std::string nodes_csv(const NodeSet& nodes);
std::string basis_table(const BasisSequence& basis);

}  // namespace vandervolt
