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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace beamauction {

/// Data rates, capacities and SBSDC bids are all Mbps.
using Mbps = double;

/// Integer scheduling tick at which a spot beam becomes available.
using Epoch = std::int64_t;

/// A bidder: a user terminal reporting aggregate demand per epoch.
struct UserTerminal
{
  std::size_t             id{};  // 1-based
  std::map<Epoch, Mbps>   demand;

  /// Demand sampled at `epoch`; throws ConfigError when no sample exists.
  Mbps demand_at(Epoch epoch) const;

  /// A terminal whose demand is `rate` at every epoch in [first, last].
  static UserTerminal constant(std::size_t id, Mbps rate, Epoch first, Epoch last);
};

/// An auctioneer: a future-available spot beam (FASB).
struct SpotBeam
{
  std::size_t id{};  // 1-based
  Mbps        capacity{};
  Epoch       available_at{};
};

/// Dense M x N matrix of non-negative finite bids, row per terminal.
class BidMatrix
{
public:
  /// Throws InputError unless rows, cols >= 1, values.size() == rows * cols
  /// and every value is finite and >= 0.
  BidMatrix(std::size_t rows, std::size_t cols, std::vector<Mbps> values);

  static BidMatrix from_rows(std::vector<std::vector<Mbps>> const &rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Mbps operator()(std::size_t terminal, std::size_t beam) const
  {
    return values_[terminal * cols_ + beam];
  }

  std::span<Mbps const> row(std::size_t terminal) const
  {
    return {values_.data() + terminal * cols_, cols_};
  }

  std::span<Mbps const> values() const noexcept { return values_; }

  Mbps max_entry() const noexcept;

  /// Copy with one terminal's row replaced (reported bids).
  BidMatrix with_row(std::size_t terminal, std::span<Mbps const> replacement) const;

  bool operator==(BidMatrix const &) const = default;

private:
  std::size_t       rows_;
  std::size_t       cols_;
  std::vector<Mbps> values_;
};

/// A matched terminal/beam pair, both 0-based.
struct Pair
{
  std::size_t terminal{};
  std::size_t beam{};

  auto operator<=>(Pair const &) const = default;
};

/// Orders pairs by beam, then terminal. This is the order used for
/// tie-breaking between equal-cost optima.
struct BeamMajorLess
{
  bool operator()(Pair const &a, Pair const &b) const noexcept
  {
    return a.beam != b.beam ? a.beam < b.beam : a.terminal < b.terminal;
  }
};

/// Injective partial matching of terminals to beams.
struct Assignment
{
  std::vector<Pair> pairs;  // sorted by BeamMajorLess
  Mbps              total_cost{0.0};

  bool contains(Pair const &p) const noexcept;
  bool operator==(Assignment const &) const = default;
};

/// Builds an Assignment from pairs, sorting them and summing their bids.
Assignment make_assignment(BidMatrix const &bids, std::vector<Pair> pairs);

struct AuctionOutcome
{
  Assignment            assignment;
  std::map<Pair, Mbps>  payments;  // exactly the winning pairs

  bool operator==(AuctionOutcome const &) const = default;
};

inline constexpr Mbps kDefaultCapacity = 150.0;

struct Scenario
{
  std::vector<UserTerminal> terminals;
  std::vector<SpotBeam>     beams;
  std::uint64_t             rng_seed{0};
  Mbps                      capacity_default{kDefaultCapacity};

  /// Throws ConfigError on non-contiguous ids, negative demand,
  /// non-positive capacity, empty sides, or fewer terminals than beams.
  void validate() const;
};

/// SBSDC bid: spare capacity of `beam` after serving `terminal`'s demand at
/// the beam's availability epoch, clamped at zero.
Mbps compute_bid(UserTerminal const &terminal, SpotBeam const &beam);

BidMatrix build_bid_matrix(Scenario const &scenario);

/// 0-based beam indices ordered by availability epoch, ties by id.
std::vector<std::size_t> availability_order(std::span<SpotBeam const> beams);

}  // namespace beamauction
