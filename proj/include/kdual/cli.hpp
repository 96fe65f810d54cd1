#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdual {

// Runs one command line; returns the process exit code
// (0 pass, 1 fail, 2 usage or input error, 3 skipped only).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdual
