#pragma once

// Command-line front end. run_cli is the whole program minus main(), so the
// test suite can drive it through in-memory streams.
//
// Exit codes: 0 success (including passing verification), 1 verification
// failure, 2 usage or input errors. Never an uncaught exception.

#include <iosfwd>
#include <string>
#include <vector>

namespace addact {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addact
