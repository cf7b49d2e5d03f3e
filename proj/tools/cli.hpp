#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relcyc::cli {

/* Runs one CLI invocation (args excludes the program name) and writes to
 * the given streams. Exit codes: 0 success, 1 domain error (reducible
 * base, defective power, ...), 2 usage or parse error. The environment
 * variable RELCYC_SEED (default 0) fixes the randomized-splitting seed. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relcyc::cli
