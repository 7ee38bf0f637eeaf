#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipc::cli {

// Dispatches one command (args excludes the program name) and streams the
// line-oriented records documented in FORMAT.md to out; diagnostics go to
// err. Returns the process exit status.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ipc::cli
