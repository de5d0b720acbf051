#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatcx {

// Runs the command line `args` (without the program name). Returns the
// exit status: 0 analyzed, 2 invalid input, 1 internal error.
//
//   analyze <file|catalog:NAME> [--only a,b,...] [--emit-connections] [--pretty]
//   catalog list
//   catalog show <name>
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatcx
