#include "entpower/report.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "entpower/commands.hpp"

using namespace entpower;

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    double v = uni(rng) * std::pow(10.0, int(rng() % 20) - 10);
    const std::string text = format_double(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(2.0 / 9.0) == "0.2222222222222222");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("power report CSV shape") {
  PowerReport exact;
  exact.gate = "sum";
  exact.d = 2;
  exact.method = "schmidt";
  exact.entropy = "linear";
  exact.value = 2.0 / 9.0;

  PowerReport mc;
  mc.gate = "swap";
  mc.d = 3;
  mc.assisted = true;
  mc.method = "monte-carlo";
  mc.entropy = "von-neumann";
  mc.value = 1.23;
  mc.std_error = 0.004;
  mc.samples = 20000;
  mc.seed = 7;

  std::ostringstream os;
  write_power_csv(os, {exact, mc});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "gate,d,assisted,method,entropy,value,stderr,samples,seed,runtime_ms");
  std::getline(is, line);
  CHECK(line == "sum,2,0,schmidt,linear,0.2222222222222222,,,,");
  std::getline(is, line);
  CHECK(line == "swap,3,1,monte-carlo,von-neumann,1.23,0.004,20000,7,");
}

TEST_CASE("power report JSON carries the same fields") {
  PowerReport mc;
  mc.gate = "sum";
  mc.d = 2;
  mc.method = "monte-carlo";
  mc.entropy = "linear";
  mc.value = 0.25;
  mc.std_error = 0.001;
  mc.samples = 100;
  mc.seed = 42;

  std::ostringstream os;
  write_power_json(os, {mc});
  const std::string text = os.str();
  CHECK(text.find("\"gate\": \"sum\"") != std::string::npos);
  CHECK(text.find("\"stderr\": 0.001") != std::string::npos);
  CHECK(text.find("\"seed\": 42") != std::string::npos);
  CHECK(text.find("runtime_ms") == std::string::npos);
}

TEST_CASE("command outputs are reproducible streams") {
  RunConfig config;
  config.command = "power";
  config.gates = {"sum"};
  config.d = 2;
  config.method = "mc";
  config.entropy = "linear";
  config.samples = 200;
  config.seed = 31337;

  std::ostringstream out1, out2, err;
  CHECK(run_command(config, out1, err) == kExitOk);
  CHECK(run_command(config, out2, err) == kExitOk);
  CHECK(out1.str() == out2.str());
  CHECK(!out1.str().empty());
}

TEST_CASE("exit codes follow the contract") {
  std::ostringstream out, err;

  RunConfig bad_gate;
  bad_gate.command = "power";
  bad_gate.gates = {"not-a-gate"};
  CHECK(run_command(bad_gate, out, err) == kExitConfigError);

  RunConfig bad_suite;
  bad_suite.command = "verify";
  bad_suite.suite = "bogus";
  CHECK(run_command(bad_suite, out, err) == kExitConfigError);

  RunConfig cap;
  cap.command = "power";
  cap.gates = {"swap"};
  cap.d = 5;
  cap.method = "trace";
  cap.assisted = true;
  CHECK(run_command(cap, out, err) == kExitConfigError);

  RunConfig table;
  table.command = "gate-table";
  table.d_min = 2;
  table.d_max = 2;
  std::ostringstream table_out;
  CHECK(run_command(table, table_out, err) == kExitOk);
  CHECK(table_out.str().find("gate,d,quantity") == 0);
}
