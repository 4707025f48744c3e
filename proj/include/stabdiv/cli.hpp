// Command-line front end. Subcommands: norm, divide, groebner, beurling,
// certify, counterexample, scan-commutators, fang-xia-probe, angle-check.
//
// Exit codes: 0 success, 1 input error, 2 numerical-diagnostic failure,
// 3 growing verdict under --expect-stable.
#pragma once

#include <string>
#include <vector>

namespace stabdiv {

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs one invocation and captures its report; used by main() and the tests.
CliResult run_cli_capture(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace stabdiv
