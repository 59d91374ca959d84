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

#include "beamauction/sim.hpp"

#include "beamauction/auction.hpp"
#include "beamauction/baseline.hpp"
#include "beamauction/errors.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace beamauction {

namespace {

void check_demand_bounds(Mbps low, Mbps high)
{
  if (!std::isfinite(low) || !std::isfinite(high) || low < 0.0 || low > high)
  {
    std::ostringstream msg;
    msg << "demand bounds [" << low << ", " << high << "] must satisfy 0 <= low <= high";
    throw ConfigError(msg.str());
  }
}

void check_capacity(Mbps capacity)
{
  if (!std::isfinite(capacity) || capacity <= 0.0)
  {
    throw ConfigError("beam capacity must be positive and finite");
  }
}

// Maps the top 53 bits of a 64-bit draw onto [0, 1). Unlike
// std::uniform_real_distribution this is identical on every standard library.
double unit_interval(std::mt19937_64 &engine)
{
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

void ExperimentConfig::validate() const
{
  if (terminals == 0)
  {
    throw ConfigError("terminal count must be at least 1");
  }
  if (fasb_counts.empty())
  {
    throw ConfigError("FASB range must not be empty");
  }
  for (std::size_t n : fasb_counts)
  {
    if (n == 0 || n > terminals)
    {
      std::ostringstream msg;
      msg << "FASB count " << n << " must lie in 1.." << terminals << " (the terminal count)";
      throw ConfigError(msg.str());
    }
  }
  check_capacity(capacity);
  check_demand_bounds(demand_low, demand_high);
  if (replications == 0)
  {
    throw ConfigError("replications must be at least 1");
  }
}

Scenario generate_scenario(std::size_t terminals, std::size_t beams, Mbps capacity, Mbps demand_low,
                           Mbps demand_high, std::uint64_t seed)
{
  if (terminals == 0 || beams == 0 || terminals < beams)
  {
    throw ConfigError("scenario needs 1 <= beams <= terminals");
  }
  check_capacity(capacity);
  check_demand_bounds(demand_low, demand_high);

  Scenario scenario;
  scenario.rng_seed         = seed;
  scenario.capacity_default = capacity;
  for (std::size_t j = 1; j <= beams; ++j)
  {
    scenario.beams.push_back({j, capacity, static_cast<Epoch>(j)});
  }

  std::mt19937_64 engine{seed};
  Mbps const      span = demand_high - demand_low;
  for (std::size_t i = 1; i <= terminals; ++i)
  {
    UserTerminal terminal{i, {}};
    for (std::size_t e = 1; e <= beams; ++e)
    {
      terminal.demand.emplace(static_cast<Epoch>(e), demand_low + span * unit_interval(engine));
    }
    scenario.terminals.push_back(std::move(terminal));
  }
  return scenario;
}

std::uint64_t replication_seed(std::uint64_t base, std::size_t n_fasb, std::size_t replication)
{
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(n_fasb), static_cast<std::uint32_t>(replication)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

ScenarioResult evaluate_scenario(Scenario const &scenario)
{
  BidMatrix const  bids  = build_bid_matrix(scenario);
  double const     beams = static_cast<double>(bids.cols());
  Assignment const vcg   = determine_winners(bids);
  auto const       order = availability_order(scenario.beams);
  Assignment const greedy = greedy_allocate(bids, order);
  return {vcg.total_cost / beams, greedy.total_cost / beams};
}

MechanismStats summarize(std::vector<double> const &samples)
{
  MechanismStats stats;
  if (samples.empty())
  {
    return stats;
  }
  double sum = 0.0;
  for (double x : samples)
  {
    sum += x;
  }
  stats.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1)
  {
    double squares = 0.0;
    for (double x : samples)
    {
      squares += (x - stats.mean) * (x - stats.mean);
    }
    stats.stddev = std::sqrt(squares / static_cast<double>(samples.size() - 1));
  }
  return stats;
}

ExperimentReport run_experiment(ExperimentConfig const &config)
{
  config.validate();

  ExperimentReport report;
  for (std::size_t n : config.fasb_counts)
  {
    std::vector<double> vcg(config.replications);
    std::vector<double> greedy(config.replications);
    for (std::size_t rep = 0; rep < config.replications; ++rep)
    {
      Scenario const scenario =
        generate_scenario(config.terminals, n, config.capacity, config.demand_low, config.demand_high,
                          replication_seed(config.rng_seed, n, rep));
      ScenarioResult const result = evaluate_scenario(scenario);
      vcg[rep]    = result.vcg_average;
      greedy[rep] = result.greedy_average;
    }
    report.rows.push_back({n, summarize(vcg), summarize(greedy), config.replications});
  }
  return report;
}

}  // namespace beamauction
