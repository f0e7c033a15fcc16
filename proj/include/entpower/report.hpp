#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entpower {

// One computed entangling-power (or operator-entanglement) value together
// with how it was obtained. stderr/samples/seed travel only with Monte Carlo
// results; runtime is filled only when timing collection is enabled so that
// repeated runs stay byte-identical.
struct PowerReport {
  std::string gate;
  int d = 2;
  bool assisted = false;
  std::string method;   // trace | schmidt | monte-carlo | closed-form
  std::string entropy;  // linear | von-neumann | bar
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<long> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> runtime_ms;
};

// Shortest decimal representation that parses back to the identical double.
std::string format_double(double value);

void write_power_csv(std::ostream& out, const std::vector<PowerReport>& reports);
void write_power_json(std::ostream& out, const std::vector<PowerReport>& reports);

// Generic CSV helper used by the table-producing commands: every cell is
// pre-formatted text; a header row is always written.
void write_csv_table(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace entpower
