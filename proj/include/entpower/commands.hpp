#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entpower/entangling_power.hpp"

namespace entpower {

// Exit code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitConfigError = 2;

struct RunConfig {
  std::string command;
  std::vector<std::string> gates;  // gate spec texts
  int d = 2;
  int d_min = 2;
  int d_max = 5;
  int theta_points = 2001;
  long samples = 20000;
  std::optional<std::uint64_t> seed;
  std::string method = "schmidt";   // schmidt | trace | mc | closed-form
  std::string entropy = "linear";   // linear | von-neumann | bar
  bool assisted = false;
  std::string format = "csv";       // csv | json
  std::string out_path;             // empty -> stdout
  std::string maxima_out;           // spin-scan companion table
  int assisted_trace_cap = kDefaultAssistedTraceCap;
  double route_tolerance = kFactorTol;
  bool timings = false;
  std::string suite;                // verify: prop1 | identities | bounds | routes | spin
  int trials = 100;
  int restarts = 12;
  int iterations = 400;
};

// Resolves the effective seed: explicit flag, else ENTPOWER_SEED, else a
// fresh nondeterministic value. The result is always echoed in outputs.
std::uint64_t resolve_seed(const RunConfig& config);

int cmd_power(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gate_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spin_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_asymptotics(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on config.command; handles --out redirection.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace entpower
