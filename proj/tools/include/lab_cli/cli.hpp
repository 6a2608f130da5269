#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lab_cli {

/// Runs one invocation. Reports go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lab_cli
