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

#include "beamauction/sim.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace beamauction::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk           = 0;
inline constexpr int kExitCheckFailed  = 1;
inline constexpr int kExitUsage        = 2;

struct SolveOptions
{
  std::filesystem::path matrix_path;
  bool                  payments{false};
};

int cmd_solve(SolveOptions const &options, std::ostream &out, std::ostream &err);

struct SimulateOptions
{
  ExperimentConfig      config;
  std::filesystem::path out_path{"report.csv"};
};

int cmd_simulate(SimulateOptions const &options, std::ostream &out, std::ostream &err);

inline constexpr std::size_t kVerifyMaxDim = 8;

struct VerifyOptions
{
  std::size_t   max_dim{6};
  std::size_t   cases{500};
  std::uint64_t seed{1};
};

struct CheckTally
{
  std::string name;
  std::size_t passed{0};
  std::size_t failed{0};
};

struct VerifySummary
{
  std::vector<CheckTally> checks;
  std::size_t             cases{0};
  std::size_t             cases_passed{0};

  bool ok() const noexcept { return cases_passed == cases; }
};

/// Random instances checked against the brute-force oracle and the VCG
/// properties. Throws OracleScopeError when max_dim > kVerifyMaxDim.
VerifySummary run_verification(VerifyOptions const &options);

int cmd_verify(VerifyOptions const &options, std::ostream &out, std::ostream &err);

/// "A..B" (inclusive), a single count, or a comma list.
std::vector<std::size_t> parse_count_range(std::string const &text);

/// "LOW..HIGH" demand bounds in Mbps.
std::pair<double, double> parse_demand_range(std::string const &text);

/// Reads a JSON experiment config; keys mirror the simulate flags.
SimulateOptions load_simulate_config(std::filesystem::path const &path);

/// Entry point behind the `beamauction` executable.
int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

}  // namespace beamauction::cli
