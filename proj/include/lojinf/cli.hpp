#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lojinf::cli {

enum class OutputFormat { text, json };

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<double> radii{1e1, 1e2, 1e3, 1e4};
  std::size_t samples_per_radius = 2000;
  unsigned certificate_attempts = 16;
  std::size_t matrix_size_cap = 5000;
  std::size_t grid_cap = 20000;
  OutputFormat format = OutputFormat::text;
};

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kError = 1,            ///< parse, IO or usage error
  kNotCertified = 2,     ///< hypothesis of the growth theorems not certified
  kVerificationFailed = 3,
};

int cmd_analyze(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_resultant(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pg(const std::string& path, const std::string& w_csv, const RunConfig& config,
           std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lojinf::cli
