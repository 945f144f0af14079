#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osc::cli {

enum exit_code : int {
    ok = 0,
    refuted = 1,
    usage = 2,
    refused = 3,
};

// Runs one `osc` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace osc::cli
