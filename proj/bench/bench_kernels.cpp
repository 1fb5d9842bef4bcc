// Serial reference vs OpenMP kernels on the pipeline's hot spots.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "projarr/cohomology_ring.hpp"

using namespace projarr;

namespace {

Arrangement load(const std::string& name) {
  std::ifstream in(std::string(PROJARR_FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_arrangement(os.str());
}

// Braid arrangement x_i = x_j in C^m.
Arrangement braid(std::size_t m) {
  std::vector<Subspace> hs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      QMatrix eq(1, m);
      eq(0, i) = 1;
      eq(0, j) = -1;
      hs.push_back(Subspace::from_equations(m, eq));
    }
  return Arrangement(m, hs);
}

const Arrangement& workload(int which) {
  static const Arrangement a3 = load("braid_a3");
  static const Arrangement skew = load("three_skew_lines");
  static const Arrangement a4 = braid(5);
  switch (which) {
    case 0: return skew;
    case 1: return a3;
    default: return a4;
  }
}

ExecutionMode mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? ExecutionMode::Serial : ExecutionMode::Parallel;
}

void BM_Poset(benchmark::State& state) {
  const auto& arr = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(arr, mode_of(state)).size());
}

void BM_Levels(benchmark::State& state) {
  const auto poset = build_poset(workload(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(all_levels(poset, mode_of(state)).size());
}

void BM_RingTable(benchmark::State& state) {
  const ProjectiveCohomology cohom(workload(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cohom.table(mode_of(state)).size());
}

void BM_Affine(benchmark::State& state) {
  const auto& arr = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AffineCohomology(arr, 0, mode_of(state)).table().size());
}

// args: {workload, serial(0)/parallel(1)}
BENCHMARK(BM_Poset)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Levels)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RingTable)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Affine)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
