#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiscord::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kIoError = 3,
    kNotConverged = 4,
};

inline constexpr int kSchemaVersion = 1;

/// Run the command-line front end. `args` excludes the program name.
/// Data goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdiscord::cli
