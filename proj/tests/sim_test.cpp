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

#include "beamauction/errors.hpp"
#include "beamauction/sim.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace beamauction {
namespace {

TEST(GenerateScenario, SameSeedSameBids)
{
  auto const a = generate_scenario(3, 2, 150.0, 50.0, 150.0, 1234);
  auto const b = generate_scenario(3, 2, 150.0, 50.0, 150.0, 1234);
  EXPECT_EQ(build_bid_matrix(a), build_bid_matrix(b));
  EXPECT_NE(build_bid_matrix(a), build_bid_matrix(generate_scenario(3, 2, 150.0, 50.0, 150.0, 1235)));
}

TEST(GenerateScenario, Shape)
{
  auto const s = generate_scenario(5, 3, 150.0, 50.0, 150.0, 1);
  ASSERT_EQ(s.terminals.size(), 5u);
  ASSERT_EQ(s.beams.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j)
  {
    EXPECT_EQ(s.beams[j].id, j + 1);
    EXPECT_EQ(s.beams[j].available_at, static_cast<Epoch>(j + 1));
    EXPECT_EQ(s.beams[j].capacity, 150.0);
  }
  for (auto const &t : s.terminals)
  {
    ASSERT_EQ(t.demand.size(), 3u);
    for (auto const &[epoch, rate] : t.demand)
    {
      EXPECT_GE(rate, 50.0);
      EXPECT_LE(rate, 150.0);
    }
  }
}

TEST(GenerateScenario, DemandAtCapacityGivesZeroBids)
{
  auto const bids = build_bid_matrix(generate_scenario(4, 3, 150.0, 150.0, 150.0, 9));
  for (double v : bids.values())
  {
    EXPECT_EQ(v, 0.0);
  }
}

TEST(GenerateScenario, NoDemandBidsFullCapacity)
{
  auto const bids = build_bid_matrix(generate_scenario(4, 3, 150.0, 0.0, 0.0, 9));
  for (double v : bids.values())
  {
    EXPECT_EQ(v, 150.0);
  }
}

TEST(GenerateScenario, RejectsInvalidBounds)
{
  EXPECT_THROW(generate_scenario(3, 2, 150.0, 100.0, 50.0, 1), ConfigError);
  EXPECT_THROW(generate_scenario(3, 2, 150.0, -1.0, 50.0, 1), ConfigError);
  EXPECT_THROW(generate_scenario(3, 2, 0.0, 1.0, 50.0, 1), ConfigError);
  EXPECT_THROW(generate_scenario(2, 3, 150.0, 1.0, 50.0, 1), ConfigError);
}

TEST(ExperimentConfig, Validation)
{
  ExperimentConfig ok;
  EXPECT_NO_THROW(ok.validate());

  ExperimentConfig too_many_beams;
  too_many_beams.fasb_counts = {31};
  EXPECT_THROW(too_many_beams.validate(), ConfigError);

  ExperimentConfig no_reps;
  no_reps.replications = 0;
  EXPECT_THROW(no_reps.validate(), ConfigError);

  ExperimentConfig inverted;
  inverted.demand_low = 151.0;
  EXPECT_THROW(inverted.validate(), ConfigError);
}

TEST(RunExperiment, SingleRow)
{
  ExperimentConfig c;
  c.fasb_counts  = {2};
  c.replications = 1;
  auto const r   = run_experiment(c);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].n_fasb, 2u);
  EXPECT_EQ(r.rows[0].replications, 1u);
  EXPECT_EQ(r.rows[0].vcg.stddev, 0.0);
  EXPECT_LE(r.rows[0].vcg.mean, r.rows[0].greedy.mean);
}

TEST(RunExperiment, VcgNeverWorseOnAverage)
{
  ExperimentConfig c;
  c.replications = 100;
  auto const r   = run_experiment(c);
  ASSERT_EQ(r.rows.size(), 7u);
  for (auto const &row : r.rows)
  {
    EXPECT_LE(row.vcg.mean, row.greedy.mean + 1e-9) << "N=" << row.n_fasb;
  }
  EXPECT_EQ(r, run_experiment(c));
}

TEST(RunExperiment, ReplicationSeedsAreIndependentOfOrder)
{
  EXPECT_EQ(replication_seed(42, 3, 7), replication_seed(42, 3, 7));
  EXPECT_NE(replication_seed(42, 3, 7), replication_seed(42, 3, 8));
  EXPECT_NE(replication_seed(42, 3, 7), replication_seed(42, 4, 7));

  ExperimentConfig forward;
  forward.fasb_counts  = {2, 5};
  forward.replications = 5;
  ExperimentConfig backward = forward;
  backward.fasb_counts      = {5, 2};
  auto const a = run_experiment(forward);
  auto const b = run_experiment(backward);
  EXPECT_EQ(a.rows[0], b.rows[1]);
  EXPECT_EQ(a.rows[1], b.rows[0]);
}

TEST(RunExperiment, ScalesWithDemandAndCapacity)
{
  ExperimentConfig base;
  base.terminals    = 12;
  base.fasb_counts  = {2, 4, 6};
  base.replications = 20;

  for (double k : {2.0, 3.0, 0.1})
  {
    ExperimentConfig scaled = base;
    scaled.capacity *= k;
    scaled.demand_low *= k;
    scaled.demand_high *= k;
    auto const a = run_experiment(base);
    auto const b = run_experiment(scaled);
    for (std::size_t r = 0; r < a.rows.size(); ++r)
    {
      if (k == 2.0)
      {
        // Doubling is exact in binary floating point.
        EXPECT_EQ(b.rows[r].vcg.mean, 2.0 * a.rows[r].vcg.mean);
        EXPECT_EQ(b.rows[r].greedy.mean, 2.0 * a.rows[r].greedy.mean);
      }
      EXPECT_NEAR(b.rows[r].vcg.mean, k * a.rows[r].vcg.mean, 1e-9 * k * 150.0);
      EXPECT_NEAR(b.rows[r].greedy.mean, k * a.rows[r].greedy.mean, 1e-9 * k * 150.0);
    }
  }
}

TEST(Summarize, MeanAndSampleDeviation)
{
  auto const s = summarize({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(5.0 / 3.0));
}

}  // namespace
}  // namespace beamauction
