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
#include "beamauction/baseline.hpp"
#include "beamauction/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace beamauction {
namespace {

using testing::Pairs;

std::vector<std::size_t> identity(std::size_t n)
{
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

TEST(Greedy, FirstBeamGrabsTheCheapTerminal)
{
  auto const bids = BidMatrix::from_rows({{1, 2}, {3, 100}});
  auto const g    = greedy_allocate(bids, identity(2));
  EXPECT_EQ(g.pairs, Pairs({{1, 1}, {2, 2}}));
  EXPECT_EQ(g.total_cost, 101.0);
  EXPECT_EQ(solve_rectangular(bids).total_cost, 5.0);
}

TEST(Greedy, SingleEntry)
{
  auto const bids = BidMatrix::from_rows({{5}});
  auto const g    = greedy_allocate(bids, identity(1));
  EXPECT_EQ(g, solve_rectangular(bids));
}

TEST(Greedy, DistinctColumnMinimaMatchHungarian)
{
  auto const bids = BidMatrix::from_rows({{1, 50, 60}, {40, 2, 70}, {55, 65, 3}, {80, 90, 99}});
  auto const g    = greedy_allocate(bids, identity(3));
  EXPECT_EQ(g, solve_rectangular(bids));
  EXPECT_EQ(g.total_cost, 6.0);
}

TEST(Greedy, FollowsBeamOrderAndBreaksTiesByTerminal)
{
  auto const bids = BidMatrix::from_rows({{4, 4}, {4, 1}, {4, 9}});
  // Beam 2 first takes terminal 2; beam 1 then ties between 1 and 3.
  std::vector<std::size_t> const order{1, 0};
  EXPECT_EQ(greedy_allocate(bids, order).pairs, Pairs({{2, 2}, {1, 1}}));
}

TEST(Greedy, MoreBeamsThanTerminalsLeavesBeamsIdle)
{
  auto const g = greedy_allocate(BidMatrix::from_rows({{3, 1, 2}}), identity(3));
  EXPECT_EQ(g.pairs, Pairs({{1, 1}}));
}

TEST(Greedy, RejectsBadOrders)
{
  auto const                     bids = BidMatrix::from_rows({{1, 2}, {3, 4}});
  std::vector<std::size_t> const dup{0, 0};
  std::vector<std::size_t> const short_order{0};
  std::vector<std::size_t> const out_of_range{0, 2};
  EXPECT_THROW(greedy_allocate(bids, dup), InputError);
  EXPECT_THROW(greedy_allocate(bids, short_order), InputError);
  EXPECT_THROW(greedy_allocate(bids, out_of_range), InputError);
}

TEST(Greedy, NeverBeatsHungarianAndStaysFeasible)
{
  std::mt19937_64 engine{17};
  for (int trial = 0; trial < 500; ++trial)
  {
    std::size_t const m     = testing::uniform_int(engine, 1, 8);
    std::size_t const n     = testing::uniform_int(engine, 1, 8);
    auto const        bids  = testing::random_matrix(engine, m, n);
    auto              order = identity(n);
    std::shuffle(order.begin(), order.end(), engine);

    auto const g = greedy_allocate(bids, order);
    EXPECT_TRUE(testing::is_injective(g, m, n));
    EXPECT_EQ(g.pairs.size(), std::min(m, n));
    EXPECT_GE(g.total_cost, solve_rectangular(bids).total_cost - 1e-9);
  }
}

}  // namespace
}  // namespace beamauction
