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
#include <set>
#include <span>
#include <vector>

namespace beamauction {

/// n x n matrix of finite, non-negative costs.
class SquareCostMatrix
{
public:
  SquareCostMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t row, std::size_t col) const { return values_[row * n_ + col]; }
  std::span<double const> values() const noexcept { return values_; }

  bool operator==(SquareCostMatrix const &) const = default;

private:
  std::size_t         n_;
  std::vector<double> values_;
};

struct SquareSolution
{
  std::vector<Pair> pairs;  // perfect matching, (row, col) as (terminal, beam)
  double            total{0.0};
};

/// A rectangular bid matrix extended to square with dummy rows or columns
/// whose every entry is the padding constant.
struct PaddedMatrix
{
  SquareCostMatrix costs;
  std::size_t      real_rows;
  std::size_t      real_cols;
  Mbps             pad;
};

/// Minimum-cost perfect matching. Among equal-cost optima the one whose pairs,
/// sorted by column then row, are lexicographically smallest is returned.
SquareSolution solve_square(SquareCostMatrix const &costs);

/// Requires pad > bids.max_entry(); throws InputError otherwise.
PaddedMatrix pad_to_square(BidMatrix const &bids, Mbps pad);

/// Smallest integer padding constant above every bid: floor(max) + 1.
Mbps default_padding(BidMatrix const &bids);

/// Minimum-total assignment saturating the smaller side, computed by padding
/// to square and running the Hungarian method. Only real pairs are returned
/// and total_cost sums real pairs only.
Assignment solve_rectangular(BidMatrix const &bids);
Assignment solve_rectangular(BidMatrix const &bids, Mbps pad);

using PairSet = std::set<Pair>;

/// As solve_rectangular, but pairs in `forbidden` are never matched. When no
/// saturating assignment avoids them, the minimum-cost assignment of maximum
/// feasible cardinality is returned (possibly empty).
Assignment solve_rectangular_forbidden(BidMatrix const &bids, PairSet const &forbidden);

inline constexpr std::size_t kBruteForceMaxSide = 8;
inline constexpr double      kBruteForceMaxEnumerations = 2.0e7;

/// Exhaustive test oracle: enumerates every maximum-cardinality injective
/// assignment avoiding `forbidden` and returns the cheapest, with the same
/// tie-break as solve_square. Throws OracleScopeError when min(M, N) exceeds
/// kBruteForceMaxSide or the enumeration would be too large.
Assignment brute_force_min_assignment(BidMatrix const &bids, PairSet const &forbidden = {});

/// Two totals are treated as equal when they differ by at most this.
double cost_tolerance(double magnitude) noexcept;

}  // namespace beamauction
