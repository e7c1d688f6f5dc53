#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace dsp::cli {

struct RunConfig {
    std::string command;  // verdict | witness | dimensions | sweep
    std::string input;    // file path, inline JSON starting with '{', or "-" for stdin
    std::uint64_t seed = 0;
    int retries = 8;
    std::string format = "json";  // json | table
    std::optional<int> genus;     // overrides the genus in the input
};

struct CommandResult {
    int exit_code = 0;  // 0 success, 1 input error, 2 criterion or assertion failure
    std::string out;
    std::string err;
};

CommandResult run(const RunConfig& cfg);

}  // namespace dsp::cli
