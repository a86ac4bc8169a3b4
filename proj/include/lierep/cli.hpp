#pragma once

#include <string>
#include <vector>

namespace lierep::cli {

enum Status : int { ok = 0, mismatch = 1, usage = 2, guard = 3 };

struct CommandResult {
    int status = ok;
    std::string out;
    std::string err;
};

// args excludes the program name, e.g. {"dim", "--type", "E6", "--weight", "1,0,0,0,0,1"}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace lierep::cli
