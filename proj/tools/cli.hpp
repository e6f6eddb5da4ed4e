#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abacus/partition.hpp"

namespace abacus::cli {

enum ExitCode : int {
    ok = 0,
    identity_failed = 1,
    usage_error = 2,
};

/// Raised for malformed command lines; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "7,7,4,4,1" -> (7,7,4,4,1); "" -> empty. Rejects increasing input.
Partition parse_partition(std::string_view text);

/// ASCII abacus with beads as "(n)" and holes as plain numbers.
std::string render_abacus(const Partition& lambda, int r);
std::string render_bar_abacus(const StrictPartition& lambda);

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abacus::cli
