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

#include <cstddef>
#include <vector>

namespace beamauction::detail {

struct DenseSquare
{
  std::size_t         n{};
  std::vector<double> a;  // row-major

  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  double max_entry() const noexcept;
};

struct HungarianResult
{
  std::vector<std::size_t> col_of_row;
  double                   total{0.0};
  std::vector<double>      row_potential;
  std::vector<double>      col_potential;
};

/// O(n^3) shortest-augmenting-path Hungarian method. Potentials satisfy
/// a(r, c) - row_potential[r] - col_potential[c] >= 0 with equality on the
/// matched cells.
HungarianResult hungarian(DenseSquare const &costs);

/// Optimal perfect matching that is lexicographically smallest over the cells
/// of the leading `ordered_rows` x `ordered_cols` block, taken column-major.
/// Cells outside that block carry no ordering preference.
std::vector<std::size_t> solve_canonical(DenseSquare const &costs, std::size_t ordered_rows,
                                         std::size_t ordered_cols);

}  // namespace beamauction::detail
