#include <fstream>
#include <iostream>
#include <sstream>

#include "tlgram/cli.hpp"

int main(int argc, char** argv) {
  using tlgram::cli::ExitCode;
  std::optional<tlgram::cli::RunConfig> config;
  try {
    config = tlgram::cli::parse_args(argc, argv, std::cout);
  } catch (const tlgram::cli::UsageError& e) {
    std::cerr << "tlgram: " << e.what() << "\nRun with --help for usage.\n";
    return static_cast<int>(ExitCode::usage);
  }
  if (!config) return static_cast<int>(ExitCode::pass);

  std::ostringstream report;
  const ExitCode code = tlgram::cli::run(*config, report, std::cerr);
  if (config->out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream file(config->out);
    if (!(file << report.str())) {
      std::cerr << "tlgram: cannot write " << config->out << "\n";
      return static_cast<int>(ExitCode::usage);
    }
  }
  return static_cast<int>(code);
}
