#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace preflab {

/** Parses and runs one command line (without the program name) and writes
 * reports to the given streams. Returns the process exit status: 0 on
 * success or a passing verification, 1 on a property failure (reports carry
 * the witnesses), 2 on usage or input errors.
 */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace preflab
