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

#include "hungarian.hpp"

#include "beamauction/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beamauction::detail {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

double matching_total(DenseSquare const &costs, std::vector<std::size_t> const &col_of_row)
{
  double total = 0.0;
  for (std::size_t r = 0; r < costs.n; ++r)
  {
    total += costs(r, col_of_row[r]);
  }
  return total;
}

}  // namespace

double DenseSquare::max_entry() const noexcept
{
  return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
}

HungarianResult hungarian(DenseSquare const &costs)
{
  std::size_t const n   = costs.n;
  double const      inf = std::numeric_limits<double>::infinity();

  // 1-based with a virtual column 0, as in the classic potentials formulation.
  std::vector<double>      u(n + 1, 0.0);
  std::vector<double>      v(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);
  std::vector<double>      minv(n + 1);
  std::vector<char>        used(n + 1);

  for (std::size_t i = 1; i <= n; ++i)
  {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do
    {
      used[j0]             = 1;
      std::size_t const i0 = row_of_col[j0];
      double      delta    = inf;
      std::size_t j1       = 0;
      for (std::size_t j = 1; j <= n; ++j)
      {
        if (used[j])
        {
          continue;
        }
        double const cur = costs(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j])
        {
          minv[j] = cur;
          way[j]  = j0;
        }
        if (minv[j] < delta)
        {
          delta = minv[j];
          j1    = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j)
      {
        if (used[j])
        {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        }
        else
        {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);

    do
    {
      std::size_t const j1 = way[j0];
      row_of_col[j0]       = row_of_col[j1];
      j0                   = j1;
    } while (j0 != 0);
  }

  HungarianResult out;
  out.col_of_row.assign(n, kUnset);
  for (std::size_t j = 1; j <= n; ++j)
  {
    out.col_of_row[row_of_col[j] - 1] = j - 1;
  }
  out.row_potential.assign(u.begin() + 1, u.end());
  out.col_potential.assign(v.begin() + 1, v.end());
  out.total = matching_total(costs, out.col_of_row);
  return out;
}

std::vector<std::size_t> solve_canonical(DenseSquare const &costs, std::size_t ordered_rows,
                                         std::size_t ordered_cols)
{
  std::size_t const n = costs.n;
  if (n == 0)
  {
    return {};
  }

  HungarianResult const base   = hungarian(costs);
  double const          rc_tol = cost_tolerance(costs.max_entry());

  // With optimal potentials, a perfect matching costs the optimum plus the
  // sum of its reduced costs, so the optima are exactly the perfect
  // matchings inside the zero-reduced-cost ("tight") subgraph.
  std::vector<char> tight(n * n);
  for (std::size_t r = 0; r < n; ++r)
  {
    for (std::size_t c = 0; c < n; ++c)
    {
      tight[r * n + c] = costs(r, c) - base.row_potential[r] - base.col_potential[c] <= rc_tol;
    }
  }

  std::vector<std::size_t> col_of_row = base.col_of_row;
  std::vector<std::size_t> row_of_col(n);
  for (std::size_t r = 0; r < n; ++r)
  {
    row_of_col[col_of_row[r]] = r;
  }
  std::vector<char> row_fixed(n, 0);
  std::vector<char> col_fixed(n, 0);

  // Looks for an alternating cycle through (row, col) in the tight subgraph
  // that leaves fixed rows/columns and excluded cells alone; flips it in.
  std::vector<std::size_t> parent_col(n);
  std::vector<char>        seen_col(n);
  std::vector<std::size_t> queue;
  auto try_force = [&](std::size_t row, std::size_t col) -> bool {
    std::size_t const start  = row_of_col[col];  // loses `col` to `row`
    std::size_t const target = col_of_row[row];  // freed by `row`
    std::fill(seen_col.begin(), seen_col.end(), 0);
    seen_col[col] = 1;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
      std::size_t const x = queue[head];
      for (std::size_t y = 0; y < n; ++y)
      {
        if (seen_col[y] || col_fixed[y] || !tight[x * n + y])
        {
          continue;
        }
        seen_col[y]   = 1;
        parent_col[y] = x;
        if (y != target)
        {
          queue.push_back(row_of_col[y]);
          continue;
        }
        // Walk back from `target`, giving each column to the row that reached it.
        for (std::size_t c = target;;)
        {
          std::size_t const r    = parent_col[c];
          std::size_t const prev = col_of_row[r];
          col_of_row[r]          = c;
          row_of_col[c]          = r;
          if (r == start)
          {
            break;
          }
          c = prev;
        }
        col_of_row[row] = col;
        row_of_col[col] = row;
        return true;
      }
    }
    return false;
  };

  for (std::size_t col = 0; col < ordered_cols; ++col)
  {
    for (std::size_t row = 0; row < ordered_rows && !col_fixed[col]; ++row)
    {
      if (row_fixed[row])
      {
        continue;
      }
      bool const include =
        col_of_row[row] == col || (tight[row * n + col] && try_force(row, col));
      if (include)
      {
        row_fixed[row] = 1;
        col_fixed[col] = 1;
      }
      else
      {
        tight[row * n + col] = 0;  // excluded from now on
      }
    }
  }
  return col_of_row;
}

}  // namespace beamauction::detail
