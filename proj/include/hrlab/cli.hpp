#pragma once

#include <string>
#include <vector>

namespace hrlab::cli {

struct DispatchResult {
    int exit_code;    // 0 ok, 1 verification failure, 2 usage, 3 numerical/solver
    std::string out;  // the serialized report (stdout payload)
};

// Parse and run one command line (without the program name). Diagnostics
// go to stderr; the report is returned.
DispatchResult dispatch(const std::vector<std::string>& args);

// main() adapter: dispatch + print.
int run_main(int argc, char** argv);

}  // namespace hrlab::cli
