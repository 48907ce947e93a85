#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "edmn/dmn/decide.hpp"
#include "edmn/error.hpp"

namespace edmn::cli {

enum ExitCode : int {
  kExitOk = 0,          // a value, or an empty report
  kExitError = 1,       // usage, I/O or parse error
  kExitNoDecision = 2,  // undefined or tie
  kExitConflict = 3,    // inconsistent knowledge or hit-policy violation
};

int exit_code(dmn::DecisionResult::Kind kind);

struct Invocation {
  std::string subcommand;  // decide check compile optimal minimal explain map repl
  std::string model_path;
  std::optional<std::string> facts;       // inline text or a path
  std::optional<std::string> facts_file;
  bool json = false;
  std::optional<std::string> criterion;
  std::optional<std::string> target;
  std::optional<std::string> utility;     // CSV path
  std::optional<std::string> table;       // table name within the DRD
  std::string to = "oel";                 // compile target: oel | edmn
  std::size_t cap = kDefaultEnumerationCap;
};

// Validates subcommand-specific flags before reading any file, then runs.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err, std::istream& in);

// argv front end (CLI11); argv[0] is the program name.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                     std::istream& in);

}  // namespace edmn::cli
