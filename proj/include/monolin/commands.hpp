#ifndef MONOLIN_COMMANDS_HPP
#define MONOLIN_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "monolin/explore.hpp"

namespace monolin {

/// One CLI invocation: subcommand name plus the shared flag set.
struct CommandRequest {
    std::string name;
    std::string file;          // input path; empty means inline_text is used
    std::string inline_text;   // raw input, mainly for tests
    std::vector<long> fields;  // defaults to {32003} when empty
    bool json_output = false;
    uint64_t seed = 1;
    int samples = 500;
    long max_gens = 20;
    double timeout_seconds = 10;
    std::string monomial;      // stronglin / extend
    std::vector<int> variables; // extend: the set A
    std::string findings_path; // explore: JSON-lines log, empty = no file
};

/// Exit codes: 0 computed (whatever the verdict), 2 bad input, 3 resource
/// cap exceeded.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
    std::string text;
};

CommandResult run_command(const CommandRequest& request);

const std::vector<std::string>& command_names();

} // namespace monolin

#endif
