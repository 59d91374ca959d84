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

#include "commands.hpp"

#include "matrix_io.hpp"

#include "beamauction/assignment.hpp"
#include "beamauction/auction.hpp"
#include "beamauction/baseline.hpp"
#include "beamauction/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace beamauction::cli {

namespace {

constexpr double kCheckTolerance = 1e-9;

std::size_t parse_count(std::string const &text)
{
  std::size_t pos   = 0;
  unsigned long long value = 0;
  try
  {
    value = std::stoull(text, &pos);
  }
  catch (std::exception const &)
  {
    pos = 0;
  }
  if (text.empty() || pos != text.size() || text.front() == '-')
  {
    throw ConfigError("'" + text + "' is not a non-negative integer");
  }
  return static_cast<std::size_t>(value);
}

double parse_real(std::string const &text)
{
  std::size_t pos   = 0;
  double      value = 0.0;
  try
  {
    value = std::stod(text, &pos);
  }
  catch (std::exception const &)
  {
    pos = 0;
  }
  if (text.empty() || pos != text.size() || !std::isfinite(value))
  {
    throw ConfigError("'" + text + "' is not a finite number");
  }
  return value;
}

BidMatrix random_instance(std::mt19937_64 &engine, std::size_t max_dim, bool with_ties)
{
  std::size_t const m = 1 + engine() % max_dim;
  std::size_t const n = 1 + engine() % max_dim;
  std::vector<double> values(m * n);
  for (double &v : values)
  {
    // Small integers make equal-cost optima common, exercising tie-breaks.
    v = with_ties ? static_cast<double>(engine() % 5)
                  : 150.0 * static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
  return {m, n, std::move(values)};
}

void print_assignment(std::ostream &out, BidMatrix const &bids, Assignment const &a)
{
  std::vector<Pair> by_terminal = a.pairs;
  std::sort(by_terminal.begin(), by_terminal.end());
  for (auto const &p : by_terminal)
  {
    out << p.terminal + 1 << ',' << p.beam + 1 << ',' << io::format_mbps(bids(p.terminal, p.beam)) << '\n';
  }
  out << "total," << io::format_mbps(a.total_cost) << '\n';
}

}  // namespace

std::vector<std::size_t> parse_count_range(std::string const &text)
{
  std::vector<std::size_t> out;
  if (auto const dots = text.find(".."); dots != std::string::npos)
  {
    std::size_t const lo = parse_count(text.substr(0, dots));
    std::size_t const hi = parse_count(text.substr(dots + 2));
    if (lo > hi)
    {
      throw ConfigError("range '" + text + "' is empty");
    }
    for (std::size_t k = lo; k <= hi; ++k)
    {
      out.push_back(k);
    }
    return out;
  }
  std::stringstream ss{text};
  std::string       item;
  while (std::getline(ss, item, ','))
  {
    out.push_back(parse_count(item));
  }
  if (out.empty())
  {
    throw ConfigError("range '" + text + "' is empty");
  }
  return out;
}

std::pair<double, double> parse_demand_range(std::string const &text)
{
  auto const dots = text.find("..");
  if (dots == std::string::npos)
  {
    throw ConfigError("demand range must look like LOW..HIGH, got '" + text + "'");
  }
  return {parse_real(text.substr(0, dots)), parse_real(text.substr(dots + 2))};
}

SimulateOptions load_simulate_config(std::filesystem::path const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw ConfigError("cannot open config " + path.string());
  }
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(in);
  }
  catch (nlohmann::json::parse_error const &e)
  {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }

  SimulateOptions options;
  ExperimentConfig &c = options.config;
  try
  {
    if (doc.contains("terminals"))
    {
      c.terminals = doc.at("terminals").get<std::size_t>();
    }
    if (doc.contains("fasb_range"))
    {
      auto const &r = doc.at("fasb_range");
      c.fasb_counts = r.is_string() ? parse_count_range(r.get<std::string>()) : r.get<std::vector<std::size_t>>();
    }
    if (doc.contains("capacity"))
    {
      c.capacity = doc.at("capacity").get<double>();
    }
    if (doc.contains("demand_low"))
    {
      c.demand_low = doc.at("demand_low").get<double>();
    }
    if (doc.contains("demand_high"))
    {
      c.demand_high = doc.at("demand_high").get<double>();
    }
    if (doc.contains("replications"))
    {
      c.replications = doc.at("replications").get<std::size_t>();
    }
    if (doc.contains("seed"))
    {
      c.rng_seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("out"))
    {
      options.out_path = doc.at("out").get<std::string>();
    }
  }
  catch (nlohmann::json::exception const &e)
  {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return options;
}

int cmd_solve(SolveOptions const &options, std::ostream &out, std::ostream &err)
{
  BidMatrix bids = [&] {
    try
    {
      return io::read_bid_matrix_file(options.matrix_path);
    }
    catch (io::ParseError const &e)
    {
      throw e.in_file(options.matrix_path.string());
    }
  }();

  if (bids.rows() < bids.cols())
  {
    err << "warning: " << bids.rows() << " terminals for " << bids.cols()
        << " beams; scenarios normally have at least as many terminals as beams\n";
  }

  if (!options.payments)
  {
    print_assignment(out, bids, determine_winners(bids));
    return kExitOk;
  }
  AuctionOutcome const outcome = run_auction(bids);
  print_assignment(out, bids, outcome.assignment);
  for (auto const &[pair, paid] : outcome.payments)
  {
    out << "payment," << pair.terminal + 1 << ',' << pair.beam + 1 << ',' << io::format_mbps(paid) << '\n';
  }
  return kExitOk;
}

int cmd_simulate(SimulateOptions const &options, std::ostream &out, std::ostream &)
{
  ExperimentReport const report = run_experiment(options.config);

  std::ofstream file{options.out_path, std::ios::binary};
  if (!file)
  {
    throw ConfigError("cannot write report to " + options.out_path.string());
  }
  io::write_report(file, report);
  file.close();
  if (!file)
  {
    throw ConfigError("failed writing report to " + options.out_path.string());
  }

  out << std::setw(7) << "n_fasb" << std::setw(14) << "vcg_mean" << std::setw(14) << "greedy_mean"
      << std::setw(12) << "vcg_sd" << std::setw(12) << "greedy_sd" << '\n';
  for (auto const &row : report.rows)
  {
    out << std::setw(7) << row.n_fasb << std::setw(14) << io::format_mbps(row.vcg.mean) << std::setw(14)
        << io::format_mbps(row.greedy.mean) << std::setw(12) << io::format_mbps(row.vcg.stddev)
        << std::setw(12) << io::format_mbps(row.greedy.stddev) << '\n';
  }
  out << "wrote " << options.out_path.string() << '\n';
  return kExitOk;
}

VerifySummary run_verification(VerifyOptions const &options)
{
  if (options.max_dim == 0 || options.max_dim > kVerifyMaxDim)
  {
    std::ostringstream msg;
    msg << "--max-dim must lie in 1.." << kVerifyMaxDim << " for brute-force enumeration";
    throw OracleScopeError(msg.str());
  }

  VerifySummary summary;
  summary.checks = {{"solver-vs-oracle"}, {"payment-oracle"}, {"loser-pays-zero"}, {"greedy-dominance"},
                    {"z-invariance"}};
  auto tally = [&](std::size_t check, bool ok) {
    ok ? ++summary.checks[check].passed : ++summary.checks[check].failed;
    return ok;
  };

  std::mt19937_64 engine{options.seed};
  for (std::size_t k = 0; k < options.cases; ++k)
  {
    BidMatrix const  bids   = random_instance(engine, options.max_dim, k % 2 == 1);
    Assignment const solved = solve_rectangular(bids);
    Assignment const oracle = brute_force_min_assignment(bids);

    bool ok = tally(0, solved.pairs == oracle.pairs &&
                         std::abs(solved.total_cost - oracle.total_cost) <= kCheckTolerance);

    bool payments_match = true;
    bool losers_zero    = true;
    for (std::size_t i = 0; i < bids.rows(); ++i)
    {
      for (std::size_t j = 0; j < bids.cols(); ++j)
      {
        Pair const   pair{i, j};
        bool const   won      = solved.contains(pair);
        double const paid     = payment(bids, solved, i, j);
        double const removed  = brute_force_min_assignment(bids, {pair}).total_cost;
        double const expected = removed - (oracle.total_cost - (won ? bids(i, j) : 0.0));
        payments_match &= std::abs(paid - expected) <= kCheckTolerance;
        if (!won)
        {
          losers_zero &= paid == 0.0;
        }
      }
    }
    ok &= tally(1, payments_match);
    ok &= tally(2, losers_zero);

    std::vector<std::size_t> order(bids.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    ok &= tally(3, greedy_allocate(bids, order).total_cost >= solved.total_cost - kCheckTolerance);

    double const     z1 = default_padding(bids);
    Assignment const a1 = solve_rectangular(bids, z1);
    Assignment const a2 = solve_rectangular(bids, 10.0 * z1);
    ok &= tally(4, a1.pairs == a2.pairs && std::abs(a1.total_cost - a2.total_cost) <= kCheckTolerance);

    ++summary.cases;
    summary.cases_passed += ok ? 1 : 0;
  }
  return summary;
}

int cmd_verify(VerifyOptions const &options, std::ostream &out, std::ostream &err)
{
  if (options.cases == 0)
  {
    err << "warning: no cases requested; nothing was verified\n";
  }
  VerifySummary const summary = run_verification(options);
  for (auto const &c : summary.checks)
  {
    out << c.name << ": " << c.passed << '/' << c.passed + c.failed << '\n';
  }
  out << summary.cases_passed << '/' << summary.cases << " passed\n";
  return summary.ok() ? kExitOk : kExitCheckFailed;
}

int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Auction-based spot beam scheduling for LEO satellites"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto        *solve_cmd = app.add_subcommand("solve", "Winner determination (and VCG payments) for a bid matrix");
  solve_cmd->add_option("matrix", solve.matrix_path, "CSV bid matrix, one row per terminal")->required();
  solve_cmd->add_flag("--payments", solve.payments, "Also print VCG payments for winning pairs");

  std::string config_path;
  std::string terminals;
  std::string fasb_range;
  std::string capacity;
  std::string demand;
  std::string reps;
  std::string seed;
  std::string out_path;
  auto       *sim_cmd = app.add_subcommand("simulate", "VCG versus greedy sweep over the number of FASBs");
  sim_cmd->add_option("--config", config_path, "JSON config; flags override its values");
  sim_cmd->add_option("--terminals", terminals, "Number of user terminals (default 30)");
  sim_cmd->add_option("--fasb-range", fasb_range, "FASB counts, e.g. 2..8 (default 2..8)");
  sim_cmd->add_option("--capacity", capacity, "Spot beam capacity in Mbps (default 150)");
  sim_cmd->add_option("--demand", demand, "Uniform demand bounds LOW..HIGH in Mbps (default 50..150)");
  sim_cmd->add_option("--reps", reps, "Replications per FASB count (default 100)");
  sim_cmd->add_option("--seed", seed, "Base RNG seed (default 42)");
  sim_cmd->add_option("--out", out_path, "Report CSV path (default report.csv)");

  VerifyOptions verify;
  auto         *verify_cmd = app.add_subcommand("verify", "Check solvers and payments against brute force");
  verify_cmd->add_option("--max-dim", verify.max_dim, "Largest matrix side (at most 8)");
  verify_cmd->add_option("--cases", verify.cases, "Number of random instances");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try
  {
    if (*solve_cmd)
    {
      return cmd_solve(solve, out, err);
    }
    if (*sim_cmd)
    {
      SimulateOptions options = config_path.empty() ? SimulateOptions{} : load_simulate_config(config_path);
      ExperimentConfig &c     = options.config;
      if (!terminals.empty())
      {
        c.terminals = parse_count(terminals);
      }
      if (!fasb_range.empty())
      {
        c.fasb_counts = parse_count_range(fasb_range);
      }
      if (!capacity.empty())
      {
        c.capacity = parse_real(capacity);
      }
      if (!demand.empty())
      {
        std::tie(c.demand_low, c.demand_high) = parse_demand_range(demand);
      }
      if (!reps.empty())
      {
        c.replications = parse_count(reps);
      }
      if (!seed.empty())
      {
        c.rng_seed = parse_count(seed);
      }
      if (!out_path.empty())
      {
        options.out_path = out_path;
      }
      c.validate();
      return cmd_simulate(options, out, err);
    }
    return cmd_verify(verify, out, err);
  }
  catch (io::ParseError const &e)
  {
    err << "parse error: " << e.what() << '\n';
  }
  catch (OracleScopeError const &e)
  {
    err << "scope error: " << e.what() << '\n';
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace beamauction::cli
