#pragma once

#include <string>
#include <vector>

namespace lagcut::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Run one command line (program name excluded). Never throws.
RunResult run(const std::vector<std::string>& args);

/// Run every entry of a batch file. The file is a JSON array of
/// {"command": "check lens", "args": [...] | {...}}; every entry is parsed
/// before any runs, and a malformed file exits 1 with nothing executed.
RunResult run_batch(const std::string& path, bool json);

}  // namespace lagcut::cli
