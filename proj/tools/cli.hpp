#ifndef GIBBS_TOOLS_CLI_HPP_
#define GIBBS_TOOLS_CLI_HPP_

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibbs/gibbs_run.hpp"

namespace gibbs::cli {

enum class Command { overshoot, conjecture, triple_sum, asymptotics, roots };
enum class Format { csv, json };

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kNumerical = 4,
};

struct RunConfig {
  Command command = Command::overshoot;
  std::string family = "laguerre";
  Rational alpha = 0;
  std::optional<Rational> lambda;
  std::vector<unsigned> n;
  int digits = 30;
  Format format = Format::csv;
  std::string output;  // empty: the stream passed to run()
  std::string via = "direct";
  std::string what = "dn_alpha";
  Rational x = 1;
};

/// Bad flag combinations and values that fail RunConfig's invariants.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// @throws UsageError for digits < 15, an empty or unsorted n list, an
/// unknown family / via / what, or a missing --lambda.
void validate(const RunConfig& config);

/// Runs one configuration and writes the table. Returns the exit status;
/// diagnostics go to @p err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] included).
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gibbs::cli

#endif  // GIBBS_TOOLS_CLI_HPP_
