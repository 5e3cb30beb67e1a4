#pragma once

#include <iosfwd>

namespace cartan {

struct CliOptions {
  bool color = false;  // ANSI emphasis in pretty tables
};

/// Runs the `cartan` command line. Returns the process exit status: 0 on
/// success, 1 when a verification check fails, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            CliOptions options = {});

}  // namespace cartan
