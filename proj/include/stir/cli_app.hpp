#pragma once

// ── Command-line front end ───────────────────────────────────────────────────
//
// Batch interface over the library: `check` decides satisfiability of a
// terminology file (optionally emitting a witness), `validate` parses and
// well-formedness-checks it, `derive-tables` prints the endpoint translation
// of the 13 interval atoms together with the corrections to the commonly
// published form of that table.
//
// Exit codes: 0 = satisfiable or clean validation, 1 = unsatisfiable,
// 2 = usage, parse, or validation error.  All streams are injected so the
// whole front end is testable in-process.

#include <iosfwd>
#include <string>

namespace stir {

struct RunConfig {
  enum class Command { Check, Validate, DeriveTables };

  Command command = Command::Check;
  std::string input;  // file path; "-" reads standard input
  bool witness = false;
  std::string format = "text";  // "text" | "json"
  bool trace = false;
  unsigned seed = 0;  // 0 = canonical deterministic search order
};

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (subcommands check/validate/derive-tables; flags --witness,
// --format, --trace, --seed) and dispatches to run().
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace stir
