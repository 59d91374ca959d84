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
#include "hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beamauction {

namespace {

detail::DenseSquare to_dense(SquareCostMatrix const &m)
{
  return {m.size(), {m.values().begin(), m.values().end()}};
}

/// Runs the canonical solver on a matrix whose leading block is the real
/// bid matrix and keeps only the real pairs.
std::vector<Pair> real_pairs(detail::DenseSquare const &costs, std::size_t rows, std::size_t cols)
{
  std::vector<std::size_t> const col_of_row = detail::solve_canonical(costs, rows, cols);
  std::vector<Pair>              pairs;
  for (std::size_t r = 0; r < rows; ++r)
  {
    if (col_of_row[r] < cols)
    {
      pairs.push_back({r, col_of_row[r]});
    }
  }
  return pairs;
}

void check_forbidden_bounds(BidMatrix const &bids, PairSet const &forbidden)
{
  for (auto const &p : forbidden)
  {
    if (p.terminal >= bids.rows() || p.beam >= bids.cols())
    {
      throw InputError("forbidden pair lies outside the bid matrix");
    }
  }
}

/// (M + N) x (M + N) formulation in which every terminal and every beam may
/// stay unmatched at a penalty large enough that cardinality is maximised
/// before cost. Forbidden cells cost more than leaving everything unmatched.
std::vector<Pair> solve_max_cardinality(BidMatrix const &bids, PairSet const &forbidden)
{
  std::size_t const m = bids.rows();
  std::size_t const n = bids.cols();
  std::size_t const s = m + n;

  double const z         = default_padding(bids);
  double const unmatched = static_cast<double>(std::min(m, n)) * z;
  double const blocked   = unmatched * static_cast<double>(s) + 1.0;

  detail::DenseSquare costs{s, std::vector<double>(s * s, 0.0)};
  for (std::size_t r = 0; r < s; ++r)
  {
    for (std::size_t c = 0; c < s; ++c)
    {
      bool const real_row = r < m;
      bool const real_col = c < n;
      double     value    = 0.0;
      if (real_row && real_col)
      {
        value = forbidden.contains({r, c}) ? blocked : bids(r, c);
      }
      else if (real_row != real_col)
      {
        value = unmatched;
      }
      costs.a[r * s + c] = value;
    }
  }
  return real_pairs(costs, m, n);
}

}  // namespace

double cost_tolerance(double magnitude) noexcept
{
  return 1e-9 * std::max(1.0, std::abs(magnitude));
}

SquareCostMatrix::SquareCostMatrix(std::size_t n, std::vector<double> values)
  : n_{n}
  , values_{std::move(values)}
{
  if (n_ == 0 || values_.size() != n_ * n_)
  {
    throw InputError("square cost matrix must be non-empty and n x n");
  }
  for (double v : values_)
  {
    if (!std::isfinite(v) || v < 0.0)
    {
      throw InputError("square cost matrix entries must be finite and non-negative");
    }
  }
}

SquareSolution solve_square(SquareCostMatrix const &costs)
{
  std::size_t const n     = costs.size();
  auto const        dense = to_dense(costs);
  auto const        cols  = detail::solve_canonical(dense, n, n);

  SquareSolution out;
  for (std::size_t r = 0; r < n; ++r)
  {
    out.pairs.push_back({r, cols[r]});
  }
  std::sort(out.pairs.begin(), out.pairs.end(), BeamMajorLess{});
  for (auto const &p : out.pairs)
  {
    out.total += costs(p.terminal, p.beam);
  }
  return out;
}

Mbps default_padding(BidMatrix const &bids)
{
  return std::floor(bids.max_entry()) + 1.0;
}

PaddedMatrix pad_to_square(BidMatrix const &bids, Mbps pad)
{
  if (!std::isfinite(pad) || !(pad > bids.max_entry()))
  {
    std::ostringstream msg;
    msg << "padding constant " << pad << " must exceed the largest bid " << bids.max_entry();
    throw InputError(msg.str());
  }
  std::size_t const m = bids.rows();
  std::size_t const n = bids.cols();
  std::size_t const s = std::max(m, n);

  std::vector<double> values(s * s, pad);
  for (std::size_t r = 0; r < m; ++r)
  {
    for (std::size_t c = 0; c < n; ++c)
    {
      values[r * s + c] = bids(r, c);
    }
  }
  return {SquareCostMatrix{s, std::move(values)}, m, n, pad};
}

Assignment solve_rectangular(BidMatrix const &bids)
{
  return solve_rectangular(bids, default_padding(bids));
}

Assignment solve_rectangular(BidMatrix const &bids, Mbps pad)
{
  PaddedMatrix const padded = pad_to_square(bids, pad);
  return make_assignment(bids, real_pairs(to_dense(padded.costs), padded.real_rows, padded.real_cols));
}

Assignment solve_rectangular_forbidden(BidMatrix const &bids, PairSet const &forbidden)
{
  check_forbidden_bounds(bids, forbidden);
  if (forbidden.empty())
  {
    return solve_rectangular(bids);
  }

  PaddedMatrix const padded = pad_to_square(bids, default_padding(bids));
  std::size_t const  s      = padded.costs.size();
  // Every saturating assignment of the padded matrix costs less than this.
  double const sentinel = padded.pad * static_cast<double>(s + 1);

  detail::DenseSquare costs = to_dense(padded.costs);
  for (auto const &p : forbidden)
  {
    costs.a[p.terminal * s + p.beam] = sentinel;
  }

  std::vector<Pair> pairs = real_pairs(costs, bids.rows(), bids.cols());
  bool const uses_forbidden =
    std::any_of(pairs.begin(), pairs.end(), [&](Pair const &p) { return forbidden.contains(p); });
  if (uses_forbidden)
  {
    pairs = solve_max_cardinality(bids, forbidden);
  }
  return make_assignment(bids, std::move(pairs));
}

}  // namespace beamauction
