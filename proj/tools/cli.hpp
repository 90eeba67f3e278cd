#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conehodge::cli {

// Runs one command. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 validation violations (report still
// emitted), 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conehodge::cli
