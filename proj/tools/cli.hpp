#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parafield::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kCapExceeded = 3,
};

/// Runs the command line `args` (without the program name). Command output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parafield::cli
