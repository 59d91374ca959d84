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
#include "beamauction/errors.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace beamauction {

namespace {

/// Depth-first enumeration of injective maps from the smaller side into the
/// larger side, with exactly `skips` elements of the smaller side unmatched.
class Enumerator
{
public:
  Enumerator(BidMatrix const &bids, PairSet const &forbidden)
    : bids_{bids}
    , forbidden_{forbidden}
    , beams_smaller_{bids.cols() <= bids.rows()}
    , small_{beams_smaller_ ? bids.cols() : bids.rows()}
    , large_{beams_smaller_ ? bids.rows() : bids.cols()}
    , partner_(small_, kNone)
    , taken_(large_, 0)
  {}

  std::size_t smaller_side() const noexcept { return small_; }

  /// Visits every feasible assignment with `skips` unmatched smaller-side
  /// elements. Returns false when none exists.
  template <typename Visit>
  bool enumerate(std::size_t skips, Visit &&visit)
  {
    found_ = false;
    recurse(0, skips, 0.0, visit);
    return found_;
  }

  std::vector<Pair> current_pairs() const
  {
    std::vector<Pair> pairs;
    for (std::size_t s = 0; s < small_; ++s)
    {
      if (partner_[s] != kNone)
      {
        pairs.push_back(to_pair(s, partner_[s]));
      }
    }
    std::sort(pairs.begin(), pairs.end(), BeamMajorLess{});
    return pairs;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  Pair to_pair(std::size_t s, std::size_t l) const
  {
    return beams_smaller_ ? Pair{l, s} : Pair{s, l};
  }

  template <typename Visit>
  void recurse(std::size_t s, std::size_t skips, double cost, Visit &visit)
  {
    if (s == small_)
    {
      found_ = true;
      visit(cost);
      return;
    }
    for (std::size_t l = 0; l < large_; ++l)
    {
      Pair const p = to_pair(s, l);
      if (taken_[l] || forbidden_.contains(p))
      {
        continue;
      }
      taken_[l]   = 1;
      partner_[s] = l;
      recurse(s + 1, skips, cost + bids_(p.terminal, p.beam), visit);
      partner_[s] = kNone;
      taken_[l]   = 0;
    }
    if (skips > 0)
    {
      recurse(s + 1, skips - 1, cost, visit);
    }
  }

  BidMatrix const          &bids_;
  PairSet const            &forbidden_;
  bool                      beams_smaller_;
  std::size_t               small_;
  std::size_t               large_;
  std::vector<std::size_t>  partner_;
  std::vector<char>         taken_;
  bool                      found_{false};
};

bool lexicographically_less(std::vector<Pair> const &a, std::vector<Pair> const &b)
{
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), BeamMajorLess{});
}

}  // namespace

Assignment brute_force_min_assignment(BidMatrix const &bids, PairSet const &forbidden)
{
  for (auto const &p : forbidden)
  {
    if (p.terminal >= bids.rows() || p.beam >= bids.cols())
    {
      throw InputError("forbidden pair lies outside the bid matrix");
    }
  }

  std::size_t const small = std::min(bids.rows(), bids.cols());
  std::size_t const large = std::max(bids.rows(), bids.cols());
  double            count = 1.0;
  for (std::size_t k = 0; k < small; ++k)
  {
    count *= static_cast<double>(large - k + 1);  // +1 for the unmatched option
  }
  if (small > kBruteForceMaxSide || count > kBruteForceMaxEnumerations)
  {
    std::ostringstream msg;
    msg << "brute-force oracle cannot enumerate a " << bids.rows() << "x" << bids.cols()
        << " matrix (smaller side limit " << kBruteForceMaxSide << ")";
    throw OracleScopeError(msg.str());
  }

  Enumerator enumerator{bids, forbidden};
  for (std::size_t skips = 0; skips <= small; ++skips)
  {
    double best = std::numeric_limits<double>::infinity();
    if (!enumerator.enumerate(skips, [&](double cost) { best = std::min(best, cost); }))
    {
      continue;
    }

    double const                     tol = cost_tolerance(best);
    std::optional<std::vector<Pair>> chosen;
    enumerator.enumerate(skips, [&](double cost) {
      if (cost > best + tol)
      {
        return;
      }
      auto pairs = enumerator.current_pairs();
      if (!chosen || lexicographically_less(pairs, *chosen))
      {
        chosen = std::move(pairs);
      }
    });
    return make_assignment(bids, std::move(*chosen));
  }
  return make_assignment(bids, {});
}

}  // namespace beamauction
