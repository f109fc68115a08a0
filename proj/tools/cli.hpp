#pragma once

#include <iosfwd>

namespace tvsb::cli {

/// Entry point for the `tvsb` command line: gen, run, check, bench.
/// Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvsb::cli
