// Command-line surface. parse_args turns an argv tail into a CommandConfig,
// run executes it; exit codes are 0 (all checks pass), 1 (some verification
// failed), 2 (usage or configuration problem).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qident/identities.hpp"
#include "qident/report_io.hpp"

namespace qident {

enum class Command {
  verify_finite,
  verify_bilateral,
  verify_substitution,
  verify_quintuple,
  verify_relation,
  verify_qdixon,
  verify_dixon_limit,
  verify_dixon_term_match,
  expand,
  coeff,
};

struct CommandConfig {
  Command command = Command::verify_finite;
  std::optional<std::int64_t> m, n, k;  // single-point selectors
  std::int64_t m_max = 10;              // grid bounds when m/n are absent
  std::int64_t n_max = 10;
  std::int64_t order = 30;
  std::int64_t trials = 50;
  std::int64_t seed = 0;
  Mutation mutation = Mutation::none;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out_path;
  bool no_timing = false;
  std::string expr;                     // expand / coeff argument
  std::int64_t coeff_q = 0, coeff_x = 0;
};

// Bad argv; the message is ready for the error stream. Maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help was requested; `text` is the help screen for the deepest
// subcommand on the parsed path. Maps to exit 0.
struct HelpRequested {
  std::string text;
};

// args excludes the program name, e.g. {"verify", "finite", "--m-max", "25"}.
// Throws UsageError or HelpRequested.
CommandConfig parse_args(const std::vector<std::string>& args);

// Reports go to `out` (or the configured --out file); diagnostics go to
// `err`. Returns the exit code.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with the conventional main() signature.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qident
