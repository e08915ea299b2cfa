#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propsim::cli {

/// Runs the command line. Returns 0 when every output was written, 2 for
/// usage errors and 1 for any other failure. Errors go to `err` as a single
/// line prefixed with a stable code (e.g. "E_USAGE: ...").
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace propsim::cli
