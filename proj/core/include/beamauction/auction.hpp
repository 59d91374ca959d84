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
#include <span>

namespace beamauction {

/// Winner determination: the beam-saturating assignment of minimum total
/// SBSDC.
Assignment determine_winners(BidMatrix const &bids);

/// VCG opportunity-cost payment for the pair (terminal, beam):
///
///   p = C(B without the pair) - (C(B) - x * b)
///
/// where C(B) is winners.total_cost, x is 1 when the pair won, and the first
/// term re-solves the auction with just that one pair removed from the
/// feasible set. Losing pairs evaluate to 0.
Mbps payment(BidMatrix const &bids, Assignment const &winners, std::size_t terminal, std::size_t beam);

/// Winners plus a payment for every winning pair.
AuctionOutcome run_auction(BidMatrix const &bids);

/// Payment received minus true cost, summed over the terminal's winning
/// pairs, when `terminal` reports `reported_row` instead of its true bids.
Mbps utility_of_report(BidMatrix const &true_bids, std::span<Mbps const> reported_row, std::size_t terminal);

}  // namespace beamauction
