#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace plift {

// Subcommand bodies shared by the binary and the tests. Exit code contract:
// 0 success, 1 invariant failure, 2 usage or input error. Usage problems
// (bad flags, unreadable paths, bad divisors passed on the command line)
// surface as exceptions for the caller to map to 2; failures found inside an
// artifact return 1 after printing what failed.

struct BuildOptions {
  unsigned ell = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::string out_path;
};
int cmd_build(const BuildOptions& opt, std::ostream& out);

struct AnalyzeOptions {
  std::string descriptor_path;
  std::string matrix_out_path;  // optional generator matrix CSV export
};
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out);

struct VerifyOptions {
  std::string descriptor_path;
};
int cmd_verify(const VerifyOptions& opt, std::ostream& out);

struct EstTableOptions {
  unsigned ell_max = 40;
  std::string out_path;        // empty: write CSV to `out`
  std::string format = "csv";
};
int cmd_est_table(const EstTableOptions& opt, std::ostream& out);

struct RepairDemoOptions {
  std::string descriptor_path;
  std::uint64_t seed = 1;
  std::uint32_t trials = 100;
  std::uint32_t erasures = 1;
};
int cmd_repair_demo(const RepairDemoOptions& opt, std::ostream& out);

}  // namespace plift
