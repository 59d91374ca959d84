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

#include "beamauction/auction.hpp"

#include "beamauction/assignment.hpp"
#include "beamauction/errors.hpp"

#include <cmath>

namespace beamauction {

Assignment determine_winners(BidMatrix const &bids)
{
  return solve_rectangular(bids);
}

Mbps payment(BidMatrix const &bids, Assignment const &winners, std::size_t terminal, std::size_t beam)
{
  if (terminal >= bids.rows() || beam >= bids.cols())
  {
    throw InputError("payment requested for a pair outside the bid matrix");
  }
  Pair const   pair{terminal, beam};
  double const won     = winners.contains(pair) ? 1.0 : 0.0;
  Mbps const   without = solve_rectangular_forbidden(bids, {pair}).total_cost;
  Mbps const   others  = winners.total_cost - won * bids(terminal, beam);
  Mbps         result  = without - others;
  // Removing a losing pair leaves the optimum in place.
  if (won == 0.0 && std::abs(result) <= cost_tolerance(winners.total_cost))
  {
    result = 0.0;
  }
  return result;
}

AuctionOutcome run_auction(BidMatrix const &bids)
{
  AuctionOutcome out{determine_winners(bids), {}};
  for (auto const &p : out.assignment.pairs)
  {
    out.payments.emplace(p, payment(bids, out.assignment, p.terminal, p.beam));
  }
  return out;
}

Mbps utility_of_report(BidMatrix const &true_bids, std::span<Mbps const> reported_row, std::size_t terminal)
{
  AuctionOutcome const outcome = run_auction(true_bids.with_row(terminal, reported_row));

  Mbps utility = 0.0;
  for (auto const &[pair, paid] : outcome.payments)
  {
    if (pair.terminal == terminal)
    {
      utility += paid - true_bids(pair.terminal, pair.beam);
    }
  }
  return utility;
}

}  // namespace beamauction
