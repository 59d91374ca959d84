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

#include "matrix_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <tuple>
#include <vector>

namespace beamauction::io {

namespace {

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string describe(std::size_t row, std::size_t column, std::string const &what, std::string const &source)
{
  std::ostringstream msg;
  if (!source.empty())
  {
    msg << source << ": ";
  }
  msg << "row " << row;
  if (column > 0)
  {
    msg << ", column " << column;
  }
  msg << ": " << what;
  return msg.str();
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t column)
{
  std::string_view const text = trim(cell);
  if (text.empty())
  {
    throw ParseError(row, column, "empty value");
  }
  double value = 0.0;
  auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value))
  {
    throw ParseError(row, column, "'" + std::string(text) + "' is not a finite number");
  }
  if (value < 0.0)
  {
    throw ParseError(row, column, "'" + std::string(text) + "' is negative");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t row, std::size_t column, std::string detail, std::string source)
  : std::runtime_error(describe(row, column, detail, source))
  , row_{row}
  , column_{column}
  , detail_{std::move(detail)}
{}

BidMatrix parse_bid_matrix(std::istream &in)
{
  std::vector<double> values;
  std::size_t         cols = 0;
  std::size_t         rows = 0;
  std::size_t         line_no = 0;
  std::string         line;
  while (std::getline(in, line))
  {
    ++line_no;
    if (trim(line).empty())
    {
      continue;
    }
    std::string_view rest{line};
    std::size_t      column = 0;
    while (true)
    {
      auto const comma = rest.find(',');
      values.push_back(parse_cell(rest.substr(0, comma), line_no, ++column));
      if (comma == std::string_view::npos)
      {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0)
    {
      cols = column;
    }
    else if (column != cols)
    {
      std::ostringstream msg;
      msg << "expected " << cols << " values, found " << column;
      throw ParseError(line_no, 0, msg.str());
    }
    ++rows;
  }
  if (rows == 0)
  {
    throw ParseError(1, 0, "bid matrix file is empty");
  }
  return {rows, cols, std::move(values)};
}

BidMatrix read_bid_matrix_file(std::filesystem::path const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw std::runtime_error("cannot open " + path.string());
  }
  return parse_bid_matrix(in);
}

void write_bid_matrix(std::ostream &out, BidMatrix const &bids)
{
  std::array<char, 64> buf{};
  for (std::size_t r = 0; r < bids.rows(); ++r)
  {
    for (std::size_t c = 0; c < bids.cols(); ++c)
    {
      if (c > 0)
      {
        out << ',';
      }
      auto const res = std::to_chars(buf.data(), buf.data() + buf.size(), bids(r, c));
      out.write(buf.data(), res.ptr - buf.data());
    }
    out << '\n';
  }
}

std::string format_mbps(double value)
{
  if (value == 0.0)
  {
    value = 0.0;  // no "-0.000000"
  }
  std::array<char, 64> buf{};
  int const n = std::snprintf(buf.data(), buf.size(), "%.6f", value);
  return {buf.data(), static_cast<std::size_t>(n)};
}

void write_report(std::ostream &out, ExperimentReport const &report)
{
  struct Line
  {
    std::size_t    n_fasb;
    std::string    mechanism;
    MechanismStats stats;
    std::size_t    replications;
  };
  std::vector<Line> lines;
  for (auto const &row : report.rows)
  {
    lines.push_back({row.n_fasb, "vcg", row.vcg, row.replications});
    lines.push_back({row.n_fasb, "greedy", row.greedy, row.replications});
  }
  std::stable_sort(lines.begin(), lines.end(), [](Line const &a, Line const &b) {
    return std::tie(a.n_fasb, a.mechanism) < std::tie(b.n_fasb, b.mechanism);
  });

  out << kReportHeader << '\n';
  for (auto const &l : lines)
  {
    out << l.n_fasb << ',' << l.mechanism << ',' << format_mbps(l.stats.mean) << ','
        << format_mbps(l.stats.stddev) << ',' << l.replications << '\n';
  }
}

}  // namespace beamauction::io
