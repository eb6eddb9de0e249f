#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2z4::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0
/// success, 1 falsified claim (verify), 2 usage, input or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2z4::cli
