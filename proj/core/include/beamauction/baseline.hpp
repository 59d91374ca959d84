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

/// Greedy baseline: beams are taken in `beam_order` (0-based, a permutation
/// of all beams) and each one goes to the unassigned terminal with the
/// smallest bid for it, lowest terminal index on ties. Beams left over once
/// every terminal is assigned stay unmatched.
Assignment greedy_allocate(BidMatrix const &bids, std::span<std::size_t const> beam_order);

}  // namespace beamauction
