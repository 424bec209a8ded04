#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gfc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_eval_error = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_config_error = 3;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Value of GFC_SCALAR, if set.
  std::optional<std::string> scalar_env;
  // Print a prompt in the REPL.
  bool interactive = false;
};

// Runs one gfc invocation; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, Io io);

}  // namespace gfc::cli
