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

#include "beamauction/baseline.hpp"

#include "beamauction/errors.hpp"

#include <limits>
#include <vector>

namespace beamauction {

Assignment greedy_allocate(BidMatrix const &bids, std::span<std::size_t const> beam_order)
{
  std::size_t const m = bids.rows();
  std::size_t const n = bids.cols();

  if (beam_order.size() != n)
  {
    throw InputError("beam order must list every beam exactly once");
  }
  std::vector<char> seen(n, 0);
  for (std::size_t beam : beam_order)
  {
    if (beam >= n || seen[beam])
    {
      throw InputError("beam order must be a permutation of the beams");
    }
    seen[beam] = 1;
  }

  std::vector<char> assigned(m, 0);
  std::vector<Pair> pairs;
  for (std::size_t beam : beam_order)
  {
    std::size_t best     = m;
    Mbps        best_bid = std::numeric_limits<Mbps>::infinity();
    for (std::size_t t = 0; t < m; ++t)
    {
      if (!assigned[t] && bids(t, beam) < best_bid)
      {
        best     = t;
        best_bid = bids(t, beam);
      }
    }
    if (best == m)
    {
      break;
    }
    assigned[best] = 1;
    pairs.push_back({best, beam});
  }
  return make_assignment(bids, std::move(pairs));
}

}  // namespace beamauction
