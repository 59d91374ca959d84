//------------------------------------------------------------------------------
//
//   Copyright 2026 The beamauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "beamauction/assignment.hpp"
#include "beamauction/auction.hpp"
#include "beamauction/baseline.hpp"
#include "beamauction/sim.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

namespace {

using namespace beamauction;

BidMatrix random_bids(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
  std::mt19937_64                        engine{seed};
  std::uniform_real_distribution<double> dist{0.0, 150.0};
  std::vector<double>                    v(rows * cols);
  for (double &x : v)
  {
    x = dist(engine);
  }
  return {rows, cols, std::move(v)};
}

void BM_SolveRectangular(benchmark::State &state)
{
  auto const bids = random_bids(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(solve_rectangular(bids));
  }
}
BENCHMARK(BM_SolveRectangular)->Args({30, 2})->Args({30, 8})->Args({100, 20})->Args({200, 200});

// Small integer costs produce many equal-cost optima, so the tie-break does
// real work here.
void BM_SolveRectangularTies(benchmark::State &state)
{
  auto const          n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64     engine{2};
  std::vector<double> v(n * n);
  for (double &x : v)
  {
    x = static_cast<double>(engine() % 3);
  }
  BidMatrix const bids{n, n, std::move(v)};
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(solve_rectangular(bids));
  }
}
BENCHMARK(BM_SolveRectangularTies)->Arg(10)->Arg(30)->Arg(60);

void BM_RunAuction(benchmark::State &state)
{
  auto const bids = random_bids(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(run_auction(bids));
  }
}
BENCHMARK(BM_RunAuction)->Args({5, 5})->Args({30, 8})->Args({60, 20});

void BM_BruteForce(benchmark::State &state)
{
  auto const n    = static_cast<std::size_t>(state.range(0));
  auto const bids = random_bids(n, n, 4);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(brute_force_min_assignment(bids));
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 8, 2);

void BM_Greedy(benchmark::State &state)
{
  auto const               bids = random_bids(30, 8, 5);
  std::vector<std::size_t> order(8);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(greedy_allocate(bids, order));
  }
}
BENCHMARK(BM_Greedy);

void BM_ExperimentSweep(benchmark::State &state)
{
  ExperimentConfig config;
  config.replications = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(run_experiment(config));
  }
}
BENCHMARK(BM_ExperimentSweep)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
