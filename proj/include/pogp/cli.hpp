#pragma once

// Command-line front end.  run() parses the argument list (without the
// program name), executes one subcommand, writes the report to `out` and
// diagnostics to `err`, and returns the process exit code:
//   0 success, 1 usage or parse error, 2 verification mismatch,
//   3 enumeration budget exceeded.

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pogp/series.hpp"

namespace pogp::cli {

/// Test seams; production callers pass nothing.
struct Hooks {
  /// Substitutes the registry closed forms inside `verify` (fault injection).
  std::function<Series(std::string_view, int, int)> registry_override;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks = nullptr);

}  // namespace pogp::cli
