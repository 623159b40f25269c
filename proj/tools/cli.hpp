#pragma once

#include <string>
#include <vector>

namespace thinkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kAbsent = 1,
    kInputError = 2,
    kSizeCap = 3,
    kInternalError = 4,
};

struct CliResult {
    int exit_code = kSuccess;
    /// One JSON document.
    std::string out;
    /// Warnings, help text for errors, diagnostics.
    std::string err;
};

/// args[0] is the program name, as in argv.
CliResult cli_dispatch(const std::vector<std::string>& args);

}  // namespace thinkit::cli
