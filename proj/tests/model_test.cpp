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
#include "beamauction/model.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace beamauction {
namespace {

using testing::uniform;

TEST(ComputeBid, SpareCapacityAtBeamEpoch)
{
  auto const terminal = UserTerminal::constant(1, 100.0, 1, 3);
  EXPECT_DOUBLE_EQ(compute_bid(terminal, {1, 150.0, 2}), 50.0);
}

TEST(ComputeBid, ZeroSpareCapacity)
{
  auto const terminal = UserTerminal::constant(1, 150.0, 1, 1);
  EXPECT_EQ(compute_bid(terminal, {1, 150.0, 1}), 0.0);
}

TEST(ComputeBid, DemandAboveCapacityClampsToZero)
{
  auto const terminal = UserTerminal::constant(1, 200.0, 1, 1);
  EXPECT_EQ(compute_bid(terminal, {1, 150.0, 1}), 0.0);
}

TEST(ComputeBid, MissingEpochNamesTerminalBeamAndEpoch)
{
  UserTerminal terminal{4, {{1, 10.0}}};
  try
  {
    compute_bid(terminal, {2, 150.0, 7});
    FAIL() << "expected ConfigError";
  }
  catch (ConfigError const &e)
  {
    std::string const what = e.what();
    EXPECT_NE(what.find("terminal 4"), std::string::npos) << what;
    EXPECT_NE(what.find("beam 2"), std::string::npos) << what;
    EXPECT_NE(what.find("epoch 7"), std::string::npos) << what;
  }
}

Scenario two_by_two()
{
  Scenario s;
  s.terminals = {{1, {{1, 100.0}, {2, 140.0}}}, {2, {{1, 120.0}, {2, 130.0}}}};
  s.beams     = {{1, 150.0, 1}, {2, 150.0, 2}};
  return s;
}

TEST(BuildBidMatrix, SingleEntry)
{
  Scenario s;
  s.terminals = {UserTerminal::constant(1, 100.0, 1, 1)};
  s.beams     = {{1, 150.0, 1}};
  EXPECT_EQ(build_bid_matrix(s), BidMatrix::from_rows({{50.0}}));
}

TEST(BuildBidMatrix, BeamsReadDemandAtTheirOwnEpoch)
{
  EXPECT_EQ(build_bid_matrix(two_by_two()), BidMatrix::from_rows({{50.0, 10.0}, {30.0, 20.0}}));
}

TEST(BuildBidMatrix, SaturatedDemandGivesAllZero)
{
  Scenario s;
  s.terminals = {UserTerminal::constant(1, 150.0, 1, 2), UserTerminal::constant(2, 400.0, 1, 2),
                 UserTerminal::constant(3, 151.0, 1, 2)};
  s.beams     = {{1, 150.0, 1}, {2, 150.0, 2}};
  auto const bids = build_bid_matrix(s);
  for (double v : bids.values())
  {
    EXPECT_EQ(v, 0.0);
  }
}

TEST(BuildBidMatrix, PropagatesMissingDemand)
{
  Scenario s = two_by_two();
  s.terminals[1].demand.erase(2);
  EXPECT_THROW(build_bid_matrix(s), ConfigError);
}

TEST(ScenarioValidate, RejectsBadShapes)
{
  Scenario fewer_terminals;
  fewer_terminals.terminals = {UserTerminal::constant(1, 1.0, 1, 2)};
  fewer_terminals.beams     = {{1, 150.0, 1}, {2, 150.0, 2}};
  EXPECT_THROW(fewer_terminals.validate(), ConfigError);

  Scenario gap = two_by_two();
  gap.terminals[1].id = 3;
  EXPECT_THROW(gap.validate(), ConfigError);

  Scenario no_capacity = two_by_two();
  no_capacity.beams[0].capacity = 0.0;
  EXPECT_THROW(no_capacity.validate(), ConfigError);

  Scenario negative = two_by_two();
  negative.terminals[0].demand[1] = -1.0;
  EXPECT_THROW(negative.validate(), ConfigError);
}

TEST(BidMatrix, RejectsInvalidEntries)
{
  EXPECT_THROW(BidMatrix(0, 1, {}), InputError);
  EXPECT_THROW(BidMatrix(1, 2, {1.0}), InputError);
  EXPECT_THROW(BidMatrix::from_rows({{1.0, -0.5}}), InputError);
  EXPECT_THROW(BidMatrix::from_rows({{1.0, std::numeric_limits<double>::infinity()}}), InputError);
  EXPECT_THROW(BidMatrix::from_rows({{1.0, 2.0}, {3.0}}), InputError);
}

TEST(AvailabilityOrder, SortsByEpochThenId)
{
  std::vector<SpotBeam> beams{{1, 150.0, 5}, {2, 150.0, 3}, {3, 150.0, 5}, {4, 150.0, 1}};
  EXPECT_EQ(availability_order(beams), (std::vector<std::size_t>{3, 1, 0, 2}));
}

TEST(BidProperties, NonNegativeMonotoneAndDeterministic)
{
  std::mt19937_64 engine{7};
  for (int trial = 0; trial < 200; ++trial)
  {
    std::size_t const n = testing::uniform_int(engine, 1, 5);
    std::size_t const m = testing::uniform_int(engine, n, 8);
    Scenario          s;
    for (std::size_t j = 1; j <= n; ++j)
    {
      s.beams.push_back({j, uniform(engine, 1.0, 300.0), static_cast<Epoch>(testing::uniform_int(engine, 0, 3))});
    }
    for (std::size_t i = 1; i <= m; ++i)
    {
      UserTerminal t{i, {}};
      for (Epoch e = 0; e <= 3; ++e)
      {
        t.demand[e] = uniform(engine, 0.0, 400.0);
      }
      s.terminals.push_back(std::move(t));
    }

    auto const bids = build_bid_matrix(s);
    EXPECT_EQ(bids, build_bid_matrix(s));
    for (double v : bids.values())
    {
      EXPECT_GE(v, 0.0);
    }

    std::size_t const i     = testing::uniform_int(engine, 0, m - 1);
    std::size_t const j     = testing::uniform_int(engine, 0, n - 1);
    Scenario          more  = s;
    more.terminals[i].demand[s.beams[j].available_at] += uniform(engine, 0.0, 100.0);
    EXPECT_LE(build_bid_matrix(more)(i, j), bids(i, j));
  }
}

}  // namespace
}  // namespace beamauction
