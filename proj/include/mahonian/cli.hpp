// Batch command-line front end: statistics, distributions, bijection
// traces, board renders, enumeration, and identity verification.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mahonian {

// argv without the program name.  Returns the process exit status:
// 0 success, 1 verification failure, 2 parse or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mahonian
