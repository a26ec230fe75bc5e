#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace okakit::cli {

using nlohmann::json;

/// One invocation of the command-line tool.
struct RunConfig {
  std::string command;  // divide | syzygy | cousin-split | cousin1 | jokuiko | selftest
  std::optional<std::string> input;
  std::optional<std::string> output;  // stdout when unset
  std::optional<std::string> csv;     // sample-grid dump
  std::optional<double> tolerance;
  std::optional<int> panels;
  std::string backend = "exact";
  std::uint64_t seed = 1;
};

struct RunResult {
  int exit_code = 0;  // 0 verified, 1 computation error or failed check, 2 schema violation
  json report;
  std::string csv;
  std::string diagnostic;
};

/// Runs a command on an already parsed input document. Never throws.
RunResult run(const RunConfig& config, const json& input);

/// Reads the input file, runs, and writes the report and CSV dump.
int run(const RunConfig& config);

/// Argument parsing front end used by the executable.
int main(int argc, char** argv);

/// Built-in randomized battery behind `selftest`.
json selftest(std::uint64_t seed, std::optional<double> tolerance);

}  // namespace okakit::cli
