#pragma once

// Command dispatch for the torifan executable. Fan arguments are JSON file
// paths or catalog:NAME.

#include <json.hpp>

#include <string>
#include <vector>

namespace torifan {

enum class Status { Ok, Error };

struct CommandResult {
    Status status = Status::Ok;
    nlohmann::ordered_json payload;
    std::vector<std::string> diagnostics;
    /// Human-readable rendering (tables, summaries) used without --json.
    std::string text;
    bool json = false;
};

/// Arguments exclude the program name.
CommandResult run(const std::vector<std::string>& args);

/// What the executable writes to standard output.
std::string render(const CommandResult& result);

inline int exit_code(const CommandResult& result) {
    return result.status == Status::Ok ? 0 : 1;
}

} // namespace torifan
