#include <benchmark/benchmark.h>

#include "vandervolt/experiments.hpp"
#include "vandervolt/hull_mesh.hpp"
#include "vandervolt/interpolant.hpp"
#include "vandervolt/lebesgue.hpp"
#include "vandervolt/linalg.hpp"
#include "vandervolt/prng.hpp"
#include "vandervolt/selection.hpp"
#include "vandervolt/sparse_grid.hpp"

namespace {

using namespace vandervolt;

DenseMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = 2.0 * rng.next_double() - 1.0;
  return m;
}

void BM_LuFactor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix a = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lu_factor(a));
}
BENCHMARK(BM_LuFactor)->Arg(8)->Arg(32)->Arg(64);

void BM_SingularValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix a = random_matrix(n, n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(a));
}
BENCHMARK(BM_SingularValues)->Arg(8)->Arg(32)->Arg(64);

void BM_MaxVolRows(benchmark::State& state) {
  const DenseMatrix v = random_matrix(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(maxvol_rows(v, 0.01));
}
BENCHMARK(BM_MaxVolRows)->Args({12, 6})->Args({64, 16})->Args({128, 32});

void BM_SmolyakSequence(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smolyak_sequence(2, k));
}
BENCHMARK(BM_SmolyakSequence)->Arg(2)->Arg(3)->Arg(4);

void BM_LebesgueDiscrete(benchmark::State& state) {
  const auto grid = smolyak_sequence(2, 2);
  const auto card = cardinal_functions(grid.basis, grid.nodes);
  const auto mesh = convex_hull_mesh(grid.nodes, 1e-2);
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_discrete(card, mesh));
}
BENCHMARK(BM_LebesgueDiscrete);

void BM_HullMesh3d(benchmark::State& state) {
  Xorshift64Star rng(17);
  std::vector<double> coords(30);
  for (double& c : coords) c = rng.next_double();
  const NodeSet nodes(3, coords);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull_mesh(nodes, 1e-2));
}
BENCHMARK(BM_HullMesh3d);

}  // namespace

BENCHMARK_MAIN();
