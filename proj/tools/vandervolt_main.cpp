// Command-line driver: basis selection, Lebesgue reports, sparse grid dumps
// and the two experiment suites, all on top of vandervolt::core.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "vandervolt/errors.hpp"
#include "vandervolt/experiments.hpp"
#include "vandervolt/hull_mesh.hpp"
#include "vandervolt/interpolant.hpp"
#include "vandervolt/io.hpp"
#include "vandervolt/lebesgue.hpp"
#include "vandervolt/sparse_grid.hpp"

namespace {

using namespace vandervolt;

constexpr int kExitDismissed = 3;

SelectionMethod parse_method(const std::string& name) {
  static const std::map<std::string, SelectionMethod> methods = {
      {"maxvol", SelectionMethod::MaxVolIterative},
      {"maxvol-exhaustive", SelectionMethod::MaxVolExhaustive},
      {"maxminsv", SelectionMethod::MaxMinSvExhaustive},
  };
  const auto it = methods.find(name);
  if (it == methods.end()) throw ParseError("unknown method '" + name + "'", 0);
  return it->second;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

/// recs.csv -> recs.hist.csv; recs -> recs.hist
std::string derived_path(const std::string& path, const std::string& tag) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "." + tag;
  return path.substr(0, dot) + "." + tag + path.substr(dot);
}

int run_select_basis(const std::string& nodes_path, const std::string& basis_spec,
                     const std::string& method, double tol, const std::string& values_path,
                     const std::string& out_path) {
  const NodeSet nodes = parse_node_file(nodes_path);
  const BasisSequence trial = parse_basis_spec(basis_spec, nodes.dimension());

  std::vector<double> values;
  const bool with_values = !values_path.empty();
  if (with_values) {
    values = parse_value_file(values_path);
    if (static_cast<int>(values.size()) != nodes.size())
      throw ParseError("value count does not match node count", 0);
  }

  const auto outcome = select_basis_run(nodes, trial, parse_method(method), tol,
                                        with_values ? &values : nullptr);
  emit(out_path, select_basis_json(outcome));
  return outcome.selection.dismissed ? kExitDismissed : 0;
}

int run_lebesgue(const std::string& nodes_path, const std::string& basis_spec,
                 const std::string& method, double tol, double mesh_measure,
                 const std::string& out_path) {
  const NodeSet nodes = parse_node_file(nodes_path);
  const BasisSequence trial = parse_basis_spec(basis_spec, nodes.dimension());

  BasisSequence basis = trial;
  if (trial.size() != nodes.size()) {
    const auto outcome = select_basis_run(nodes, trial, parse_method(method), tol, nullptr);
    if (outcome.selection.dismissed) {
      std::cerr << "selected basis is nearly singular; refusing to report\n";
      return kExitDismissed;
    }
    basis = outcome.basis;
  }

  const auto mesh = convex_hull_mesh(nodes, mesh_measure);
  const auto report = lebesgue_report(cardinal_functions(basis, nodes), mesh);
  emit(out_path, lebesgue_report_json(report));
  return 0;
}

int run_sparse_grid(int d, int k, const std::string& out_path) {
  const auto grid = smolyak_sequence(d, k);
  const std::string nodes = nodes_csv(grid.nodes);
  const std::string basis = basis_table(grid.basis);
  if (out_path.empty()) {
    std::cout << nodes << '\n' << basis;
  } else {
    write_text_file(out_path, nodes);
    write_text_file(derived_path(out_path, "basis"), basis);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-volume polynomial basis selection for multivariate interpolation"};
  app.require_subcommand(1);

  std::string nodes_path, basis_spec, values_path, out_path;
  std::string method = "maxvol";
  double tol = 0.01;
  double mesh_measure = 1e-2;
  int d = 2, n = 4, k = 2, degree = 2, trials = 1000;
  std::uint64_t seed = 1;
  bool full = false;

  auto* select = app.add_subcommand("select-basis", "Select an invertible basis for a node set");
  select->add_option("--nodes", nodes_path, "node CSV file")->required();
  select->add_option("--basis", basis_spec, "trial basis, e.g. monomial:degree=2")->required();
  select->add_option("--method", method, "maxvol | maxvol-exhaustive | maxminsv");
  select->add_option("--tol", tol, "MaxVol dominance tolerance");
  select->add_option("--values", values_path, "data file; also prints interpolation coefficients");
  select->add_option("--out", out_path, "output path (default stdout)");

  auto* lebesgue = app.add_subcommand("lebesgue", "Discrete Lebesgue constant and bounds");
  lebesgue->add_option("--nodes", nodes_path, "node CSV file")->required();
  lebesgue->add_option("--basis", basis_spec, "trial basis spec")->required();
  lebesgue->add_option("--method", method, "selection method when #basis > #nodes");
  lebesgue->add_option("--tol", tol, "MaxVol dominance tolerance");
  lebesgue->add_option("--mesh-measure", mesh_measure, "max simplex measure of the hull mesh");
  lebesgue->add_option("--out", out_path, "output path (default stdout)");

  auto* grid = app.add_subcommand("sparse-grid", "Dump a Smolyak grid and its basis");
  grid->add_option("--d", d, "dimension (2 or 3)")->required();
  grid->add_option("--k", k, "order (>= 0)")->required();
  grid->add_option("--out", out_path, "node CSV path; basis table goes to <out stem>.basis.<ext>");

  auto* experiment = app.add_subcommand("experiment", "Reproduce the experiment suites");
  experiment->require_subcommand(1);

  auto* random_nodes = experiment->add_subcommand("random-nodes",
                                                  "Random-node basis selection histograms");
  random_nodes->add_option("--d", d, "dimension (2 or 3)");
  random_nodes->add_option("--n", n, "nodes per trial");
  random_nodes->add_option("--degree", degree, "monomial trial basis total degree");
  random_nodes->add_option("--trials", trials, "trial count (desk scale default 1000)");
  random_nodes->add_option("--seed", seed, "PRNG seed");
  random_nodes->add_option("--tol", tol, "MaxVol dominance tolerance");
  random_nodes->add_option("--mesh-measure", mesh_measure, "max simplex measure");
  random_nodes->add_option("--method", method, "maxvol | maxvol-exhaustive for the MaxVol column");
  random_nodes->add_option("--out", out_path, "records CSV path; histogram at <out stem>.hist.<ext>");
  random_nodes->add_flag("--full", full, "run the full 10000-trial scale");

  auto* incomplete = experiment->add_subcommand("incomplete-grid",
                                                "Lebesgue constants over incomplete sparse grids");
  incomplete->add_option("--d", d, "dimension (2 or 3)");
  incomplete->add_option("--k", k, "coarse grid order (2 or 3)");
  incomplete->add_option("--tol", tol, "MaxVol dominance tolerance");
  incomplete->add_option("--mesh-measure", mesh_measure, "max simplex measure");
  incomplete->add_option("--out", out_path, "curve CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (select->parsed())
      return run_select_basis(nodes_path, basis_spec, method, tol, values_path, out_path);
    if (lebesgue->parsed())
      return run_lebesgue(nodes_path, basis_spec, method, tol, mesh_measure, out_path);
    if (grid->parsed()) return run_sparse_grid(d, k, out_path);
    if (random_nodes->parsed()) {
      ExperimentConfig config;
      config.experiment = ExperimentKind::RandomNodes;
      config.d = d;
      config.n = n;
      config.degree = degree;
      config.trials = trials;
      config.seed = seed;
      config.tol = tol;
      config.mesh_measure = mesh_measure;
      config.full = full;
      config.method = parse_method(method);
      if (config.method == SelectionMethod::MaxMinSvExhaustive)
        throw ParseError("random-nodes --method must be maxvol or maxvol-exhaustive", 0);
      const auto result = run_random_nodes(config);
      if (out_path.empty()) {
        std::cout << trial_records_csv(result) << '\n' << histograms_csv(result);
      } else {
        write_text_file(out_path, trial_records_csv(result));
        write_text_file(derived_path(out_path, "hist"), histograms_csv(result));
      }
      std::cerr << "dismissed trials: " << result.dismissed_count << "\n";
      return 0;
    }
    if (incomplete->parsed()) {
      ExperimentConfig config;
      config.experiment = ExperimentKind::IncompleteGrid;
      config.d = d;
      config.k = k;
      config.tol = tol;
      config.mesh_measure = mesh_measure;
      emit(out_path, curve_csv(run_incomplete_grid(config)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
