#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bribery {

// Entry point of the `bribery` command. args[0] is the program name.
// Exit codes: 0 yes/success, 1 no/failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bribery
