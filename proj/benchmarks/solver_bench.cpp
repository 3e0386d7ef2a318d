#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "pegsol/automaton.hpp"
#include "pegsol/board.hpp"
#include "pegsol/generate.hpp"
#include "pegsol/minpegs.hpp"
#include "pegsol/solver.hpp"

namespace {

const pegsol::Configuration& board_of(std::int64_t length) {
  static std::map<std::int64_t, pegsol::Configuration> cache;
  auto it = cache.find(length);
  if (it == cache.end())
    it = cache.emplace(length, pegsol::generate_solvable(length, 99)).first;
  return it->second;
}

void BM_Accepts(benchmark::State& state) {
  const pegsol::Configuration& board = board_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pegsol::accepts(board));
  state.SetComplexityN(state.range(0));
}

void BM_SolveSingle(benchmark::State& state) {
  const pegsol::Configuration& board = board_of(state.range(0));
  for (auto _ : state) {
    pegsol::Plan plan = pegsol::solve_single(board);
    benchmark::DoNotOptimize(plan.moves.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_SolveMin(benchmark::State& state) {
  const pegsol::Configuration& board = board_of(state.range(0));
  for (auto _ : state) {
    pegsol::SolveResult result = pegsol::solve_min(board);
    benchmark::DoNotOptimize(result.combined.moves.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_Generate(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    pegsol::Configuration board = pegsol::generate_solvable(state.range(0), ++seed);
    benchmark::DoNotOptimize(board.cells().data());
  }
  state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_Accepts)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();
BENCHMARK(BM_SolveSingle)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();
BENCHMARK(BM_SolveMin)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();
BENCHMARK(BM_Generate)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

BENCHMARK_MAIN();
