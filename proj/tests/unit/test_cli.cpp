#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "vandervolt/io.hpp"

#ifndef VANDERVOLT_CLI_PATH
#define VANDERVOLT_CLI_PATH "vandervolt"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VANDERVOLT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) output += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("sparse-grid subcommand dumps the order-2 rule") {
  const auto res = run_cli("sparse-grid --d 2 --k 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.rfind("-1,0\n", 0) == 0);
  CHECK(res.output.find("13\tchebyshev\t(2,2)") != std::string::npos);
}

TEST_CASE("select-basis returns four quadratic functions for four planar nodes") {
  const std::string nodes_path = "cli_nodes.csv";
  vandervolt::write_text_file(nodes_path, "# four nodes\n0.1,0.2\n0.8,0.3\n0.4,0.9\n0.6,0.6\n");
  const auto res = run_cli("select-basis --nodes cli_nodes.csv --basis monomial:degree=2 --method maxvol");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"row_indices\"") != std::string::npos);
  CHECK(res.output.find("\"dismissed\": false") != std::string::npos);
  std::remove(nodes_path.c_str());
}

TEST_CASE("select-basis exits with code 3 on rank-deficient node sets") {
  const std::string nodes_path = "cli_collinear.csv";
  vandervolt::write_text_file(nodes_path, "0,0\n0.25,0.25\n0.5,0.5\n1,1\n");
  const auto res =
      run_cli("select-basis --nodes cli_collinear.csv --basis monomial:degree=2 --method maxvol-exhaustive");
  CHECK(res.exit_code == 3);
  std::remove(nodes_path.c_str());
}

TEST_CASE("lebesgue subcommand reports the unit simplex constant") {
  const std::string nodes_path = "cli_simplex.csv";
  vandervolt::write_text_file(nodes_path, "0,0\n1,0\n0,1\n");
  const auto res = run_cli("lebesgue --nodes cli_simplex.csv --basis monomial:degree=1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"lambda\": 1.0") != std::string::npos);
  std::remove(nodes_path.c_str());
}

TEST_CASE("experiment random-nodes emits records and histograms") {
  const auto res = run_cli("experiment random-nodes --d 2 --n 4 --degree 2 --trials 3 --seed 9");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("trial,lambda_best") != std::string::npos);
  CHECK(res.output.find("bin_lo,bin_hi") != std::string::npos);
}

TEST_CASE("node file parse errors mention the line") {
  const std::string nodes_path = "cli_bad.csv";
  vandervolt::write_text_file(nodes_path, "0,0\nnot-a-number,1\n");
  const auto res = run_cli("select-basis --nodes cli_bad.csv --basis monomial:degree=2");
  CHECK(res.exit_code == 1);
  std::remove(nodes_path.c_str());
}
