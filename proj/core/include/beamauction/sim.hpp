#pragma once
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

#include "beamauction/model.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace beamauction {

/// Settings for the VCG-versus-greedy sweep over the number of FASBs.
struct ExperimentConfig
{
  std::size_t              terminals{30};
  std::vector<std::size_t> fasb_counts{2, 3, 4, 5, 6, 7, 8};
  Mbps                     capacity{kDefaultCapacity};
  Mbps                     demand_low{50.0};
  Mbps                     demand_high{150.0};
  std::size_t              replications{100};
  std::uint64_t            rng_seed{42};

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

struct MechanismStats
{
  double mean{0.0};
  double stddev{0.0};  // sample standard deviation, 0 for a single replication

  bool operator==(MechanismStats const &) const = default;
};

/// Average SBSDC (assignment total / number of beams) aggregated over
/// replications for one FASB count.
struct ExperimentRow
{
  std::size_t    n_fasb{};
  MechanismStats vcg;
  MechanismStats greedy;
  std::size_t    replications{};

  bool operator==(ExperimentRow const &) const = default;
};

struct ExperimentReport
{
  std::vector<ExperimentRow> rows;  // in config order

  bool operator==(ExperimentReport const &) const = default;
};

struct ScenarioResult
{
  Mbps vcg_average{};
  Mbps greedy_average{};
};

/// N beams with availability epochs 1..N and M terminals whose demand at
/// every epoch is drawn uniformly from [demand_low, demand_high].
Scenario generate_scenario(std::size_t terminals, std::size_t beams, Mbps capacity, Mbps demand_low,
                           Mbps demand_high, std::uint64_t seed);

/// Seed for one replication, independent of the order replications run in.
std::uint64_t replication_seed(std::uint64_t base, std::size_t n_fasb, std::size_t replication);

/// Runs both mechanisms on one scenario. Greedy takes beams in availability
/// order.
ScenarioResult evaluate_scenario(Scenario const &scenario);

ExperimentReport run_experiment(ExperimentConfig const &config);

/// Sample mean and standard deviation.
MechanismStats summarize(std::vector<double> const &samples);

}  // namespace beamauction
