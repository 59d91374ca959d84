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
#include "beamauction/sim.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace beamauction::io {

/// A bid matrix file that could not be parsed. Row and column are 1-based;
/// column is 0 when the problem concerns the whole row.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t row, std::size_t column, std::string detail, std::string source = {});

  std::size_t        row() const noexcept { return row_; }
  std::size_t        column() const noexcept { return column_; }
  std::string const &detail() const noexcept { return detail_; }

  /// Same error, prefixed with the file it came from.
  ParseError in_file(std::string source) const { return {row_, column_, detail_, std::move(source)}; }

private:
  std::size_t row_;
  std::size_t column_;
  std::string detail_;
};

/// Comma-separated values, one row per terminal, no header. Blank lines are
/// ignored and row numbers in diagnostics count physical lines.
BidMatrix parse_bid_matrix(std::istream &in);
BidMatrix read_bid_matrix_file(std::filesystem::path const &path);

/// Writes values in shortest round-trip form so the file re-parses exactly.
void write_bid_matrix(std::ostream &out, BidMatrix const &bids);

/// Fixed six-decimal rendering used for every reported total and payment.
std::string format_mbps(double value);

inline constexpr char const *kReportHeader = "n_fasb,mechanism,mean_avg_sbsdc,stddev,replications";

/// One row per (FASB count, mechanism), sorted by FASB count then mechanism
/// name.
void write_report(std::ostream &out, ExperimentReport const &report);

}  // namespace beamauction::io
