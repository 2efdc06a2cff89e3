#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multinet::cli {

enum Exit { ok = 0, property_failed = 1, usage = 2 };

/// Runs one command line (without the program name). JSON or DOT goes to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multinet::cli
