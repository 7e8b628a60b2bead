#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dwt::cli {

/// Runs one command line (arguments after the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 for invalid input or
/// usage errors, 2 for numeric failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CoverageEntry {
    std::string_view operation;
    std::string_view subcommand;
};

/// Home subcommand of every library operation.
std::span<const CoverageEntry> coverage();

/// Every leaf subcommand path, e.g. "weibull fit".
std::vector<std::string> subcommands();

}  // namespace dwt::cli
