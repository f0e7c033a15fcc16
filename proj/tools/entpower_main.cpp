#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "entpower/commands.hpp"

namespace {

void add_output_flags(CLI::App* cmd, entpower::RunConfig& config) {
  cmd->add_option("--format", config.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", config.out_path, "Write output to this path");
  cmd->add_flag("--timings", config.timings,
                "Include wall-clock runtimes in reports (breaks byte-identical reruns)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entpower: entangling power and operator entanglement of two-qudit gates"};
  app.require_subcommand(1);

  entpower::RunConfig config;
  std::uint64_t seed_value = 0;

  auto* power = app.add_subcommand("power", "Compute one entangling-power value");
  power->add_option("--gate", config.gates, "Gate spec (sum, dsum, swap, cphase, spin:<theta>, controlled:<file>)")
      ->required();
  power->add_option("--d", config.d, "Qudit dimension")->check(CLI::Range(2, 64));
  power->add_flag("--assisted", config.assisted, "Ancilla-assisted variant");
  power->add_option("--method", config.method, "schmidt | trace | mc | closed-form")
      ->check(CLI::IsMember({"schmidt", "trace", "mc", "closed-form"}));
  power->add_option("--entropy", config.entropy, "linear | von-neumann | bar")
      ->check(CLI::IsMember({"linear", "von-neumann", "bar"}));
  power->add_option("--samples", config.samples, "Monte Carlo sample count");
  auto* power_seed = power->add_option("--seed", seed_value, "Monte Carlo seed");
  power->add_option("--trace-cap", config.assisted_trace_cap,
                    "Qudit-dimension cap for the assisted trace contraction");
  add_output_flags(power, config);

  auto* table = app.add_subcommand("gate-table",
                                   "Closed forms vs both computed routes for sum/dsum/swap/cphase");
  table->add_option("--d-min", config.d_min, "Smallest dimension")->check(CLI::Range(2, 64));
  table->add_option("--d-max", config.d_max, "Largest dimension")->check(CLI::Range(2, 64));
  table->add_option("--trace-cap", config.assisted_trace_cap,
                    "Qudit-dimension cap for the assisted trace contraction");
  table->add_option("--tolerance", config.route_tolerance, "Deviation tolerance");
  add_output_flags(table, config);

  auto* spin = app.add_subcommand("spin-scan",
                                  "Operator entanglement of the spin gate over a theta grid");
  spin->add_option("--points", config.theta_points,
                   "Grid size spanning [0, 2*pi], endpoints included")
      ->check(CLI::Range(3, 1000001));
  spin->add_option("--maxima-out", config.maxima_out,
                   "Write the detected-maxima table to this path");
  add_output_flags(spin, config);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", config.suite, "prop1 | identities | bounds | routes | spin")
      ->required()
      ->check(CLI::IsMember({"prop1", "identities", "bounds", "routes", "spin"}));
  verify->add_option("--d", config.d, "Qudit dimension")->check(CLI::Range(2, 64));
  verify->add_option("--trials", config.trials, "Randomized trials per suite");
  verify->add_option("--samples", config.samples, "Monte Carlo sample count");
  auto* verify_seed = verify->add_option("--seed", seed_value, "Randomness seed");
  verify->add_option("--gate", config.gates, "Restrict bounds suite to these gates");
  verify->add_option("--points", config.theta_points, "Spin suite grid size");
  verify->add_option("--trace-cap", config.assisted_trace_cap,
                     "Qudit-dimension cap for the assisted trace contraction");
  verify->add_option("--tolerance", config.route_tolerance,
                     "Deviation tolerance for the routes suite");
  add_output_flags(verify, config);

  auto* asym = app.add_subcommand("asymptotics",
                                  "Exact ebar values against their large-d leading terms");
  asym->add_option("--d-max", config.d_max, "Largest dimension (doubling from 4)")
      ->check(CLI::Range(4, 64));
  asym->add_option("--gate", config.gates, "Gates to tabulate (default sum,dsum,swap)");
  add_output_flags(asym, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : entpower::kExitConfigError;
  }

  if (asym->parsed() && !asym->count("--d-max")) config.d_max = 64;
  if (power_seed->count() || verify_seed->count()) config.seed = seed_value;
  config.command = app.get_subcommands().front()->get_name();

  try {
    return entpower::run_command(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "entpower: " << e.what() << '\n';
    return entpower::kExitConfigError;
  }
}
