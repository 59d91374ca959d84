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

#include "beamauction/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace beamauction {

Mbps UserTerminal::demand_at(Epoch epoch) const
{
  auto it = demand.find(epoch);
  if (it == demand.end())
  {
    std::ostringstream msg;
    msg << "terminal " << id << " has no demand sample at epoch " << epoch;
    throw ConfigError(msg.str());
  }
  return it->second;
}

UserTerminal UserTerminal::constant(std::size_t id, Mbps rate, Epoch first, Epoch last)
{
  UserTerminal t{id, {}};
  for (Epoch e = first; e <= last; ++e)
  {
    t.demand.emplace(e, rate);
  }
  return t;
}

BidMatrix::BidMatrix(std::size_t rows, std::size_t cols, std::vector<Mbps> values)
  : rows_{rows}
  , cols_{cols}
  , values_{std::move(values)}
{
  if (rows_ == 0 || cols_ == 0)
  {
    throw InputError("bid matrix must have at least one row and one column");
  }
  if (values_.size() != rows_ * cols_)
  {
    throw InputError("bid matrix value count does not match its dimensions");
  }
  for (std::size_t k = 0; k < values_.size(); ++k)
  {
    if (!std::isfinite(values_[k]) || values_[k] < 0.0)
    {
      std::ostringstream msg;
      msg << "bid at row " << k / cols_ + 1 << ", column " << k % cols_ + 1
          << " must be finite and non-negative";
      throw InputError(msg.str());
    }
  }
}

BidMatrix BidMatrix::from_rows(std::vector<std::vector<Mbps>> const &rows)
{
  if (rows.empty() || rows.front().empty())
  {
    throw InputError("bid matrix must have at least one row and one column");
  }
  std::size_t const cols = rows.front().size();
  std::vector<Mbps> values;
  values.reserve(rows.size() * cols);
  for (auto const &r : rows)
  {
    if (r.size() != cols)
    {
      throw InputError("bid matrix rows have different lengths");
    }
    values.insert(values.end(), r.begin(), r.end());
  }
  return {rows.size(), cols, std::move(values)};
}

Mbps BidMatrix::max_entry() const noexcept
{
  return *std::max_element(values_.begin(), values_.end());
}

BidMatrix BidMatrix::with_row(std::size_t terminal, std::span<Mbps const> replacement) const
{
  if (terminal >= rows_ || replacement.size() != cols_)
  {
    throw InputError("replacement row does not fit the bid matrix");
  }
  std::vector<Mbps> values = values_;
  std::copy(replacement.begin(), replacement.end(), values.begin() + static_cast<std::ptrdiff_t>(terminal * cols_));
  return {rows_, cols_, std::move(values)};
}

bool Assignment::contains(Pair const &p) const noexcept
{
  return std::binary_search(pairs.begin(), pairs.end(), p, BeamMajorLess{});
}

Assignment make_assignment(BidMatrix const &bids, std::vector<Pair> pairs)
{
  std::sort(pairs.begin(), pairs.end(), BeamMajorLess{});
  Assignment out{std::move(pairs), 0.0};
  for (auto const &p : out.pairs)
  {
    out.total_cost += bids(p.terminal, p.beam);
  }
  return out;
}

void Scenario::validate() const
{
  if (terminals.empty() || beams.empty())
  {
    throw ConfigError("scenario needs at least one terminal and one beam");
  }
  if (terminals.size() < beams.size())
  {
    throw ConfigError("scenario must have at least as many terminals as beams");
  }
  for (std::size_t k = 0; k < terminals.size(); ++k)
  {
    if (terminals[k].id != k + 1)
    {
      throw ConfigError("terminal ids must be contiguous 1..M in order");
    }
    for (auto const &[epoch, rate] : terminals[k].demand)
    {
      if (!std::isfinite(rate) || rate < 0.0)
      {
        std::ostringstream msg;
        msg << "terminal " << k + 1 << " has invalid demand at epoch " << epoch;
        throw ConfigError(msg.str());
      }
    }
  }
  for (std::size_t k = 0; k < beams.size(); ++k)
  {
    if (beams[k].id != k + 1)
    {
      throw ConfigError("beam ids must be contiguous 1..N in order");
    }
    if (!std::isfinite(beams[k].capacity) || beams[k].capacity <= 0.0)
    {
      std::ostringstream msg;
      msg << "beam " << k + 1 << " must have positive finite capacity";
      throw ConfigError(msg.str());
    }
  }
}

Mbps compute_bid(UserTerminal const &terminal, SpotBeam const &beam)
{
  auto it = terminal.demand.find(beam.available_at);
  if (it == terminal.demand.end())
  {
    std::ostringstream msg;
    msg << "terminal " << terminal.id << " has no demand sample for beam " << beam.id
        << " at epoch " << beam.available_at;
    throw ConfigError(msg.str());
  }
  return std::max(0.0, beam.capacity - it->second);
}

BidMatrix build_bid_matrix(Scenario const &scenario)
{
  scenario.validate();
  std::size_t const m = scenario.terminals.size();
  std::size_t const n = scenario.beams.size();
  std::vector<Mbps> values;
  values.reserve(m * n);
  for (auto const &t : scenario.terminals)
  {
    for (auto const &b : scenario.beams)
    {
      values.push_back(compute_bid(t, b));
    }
  }
  return {m, n, std::move(values)};
}

std::vector<std::size_t> availability_order(std::span<SpotBeam const> beams)
{
  std::vector<std::size_t> order(beams.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (beams[a].available_at != beams[b].available_at)
    {
      return beams[a].available_at < beams[b].available_at;
    }
    return beams[a].id < beams[b].id;
  });
  return order;
}

}  // namespace beamauction
