#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qhalg::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string field = "Q";
  /// 0 means 2n, or the value stored in the input.
  int max_len = 0;
  std::uint64_t seed = 1;
  /// Assignment cap for `search`.
  long budget = 4096;
  std::string out;
  /// 1-based; 0 means every vertex.
  int vertex = 0;
  std::string dot;
  std::string export_algebra;
  std::string pool = "0,1";
  int degree = 2;
  bool allow_large = false;
};

struct RunResult {
  /// 0 pass, 2 certification failed, 1 operational error.
  int status = 1;
  std::string report;
};

/// Runs one subcommand. The report is written to config.out when set and is
/// always returned.
RunResult run(const RunConfig& config);

/// Parses argv, runs, prints the report to `out` unless --out is given.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qhalg::cli
