#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphphys::cli {

/// Runs one command; args exclude the program name. Returns the exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace graphphys::cli
