#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlgram::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class ExitCode : int { pass = 0, verification_failed = 1, usage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 0;
  int k = 0;
  int j = 0;
  std::string mode = "symbolic";
  int trials = 32;
  int samples = 3;
  std::uint64_t seed = 1;
  std::string format;  // empty: the command's default
  std::string out;     // empty: standard output
  std::optional<std::string> sample;
};

/// Parses argv into a RunConfig. Throws UsageError (with the offending
/// flag and its valid range) on bad input; prints help and returns nullopt
/// for --help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out);

/// Runs one command, writing the report to `out`. Deterministic in the
/// config. Returns pass, verification_failed, or usage (for guard and
/// argument errors, with the message written to `err`).
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Quotes a CSV field when it holds a comma, quote, or line break.
std::string csv_field(const std::string& value);

}  // namespace tlgram::cli
