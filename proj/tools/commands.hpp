#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mahler::cli {

// args exclude the program name; returns the process exit code
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
// one JSON object per line: {"command": [args...], "expect": {...}}
int run_fixtures(const std::string &path, std::ostream &out, std::ostream &err);

} // namespace mahler::cli
