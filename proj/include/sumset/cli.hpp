#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumset/decomposition.hpp"
#include "sumset/scan.hpp"
#include "sumset/verify.hpp"

namespace sumset::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kVerificationFailed = 2,
  kResourceCap = 3,
};

enum class Format { kPlain, kRecords };

/// Parsed command line. Exactly one (sub)command is selected.
struct CliConfig {
  std::string command;     // compute, bound, verify, decompose, scan
  std::string mode;        // verify: direct|lemma1|complement|inclusions; scan: extremal|inverse-eh
  std::string set_literal;
  std::string manifest_path;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> m;
  std::optional<std::uint64_t> p;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> max_diameter;
  std::string counts;
  std::string bound_kind = "direct";
  bool all_subsets = false;
  unsigned jobs = 0;
  std::uint64_t cap = 100'000'000;
  Format format = Format::kPlain;
  int verbosity = 0;
};

// Verdict to exit status.
int exit_code(const BoundReport& rep);
int exit_code(const ComplementReport& rep);
int exit_code(const Lemma1Report& rep);
int exit_code(const WitnessReport& rep);
int exit_code(const ScanReport& rep);

/// Exit status for an exception escaping a command, or -1 if it is not one
/// of the library's error types.
int exit_code(const std::exception& e);

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumset::cli
