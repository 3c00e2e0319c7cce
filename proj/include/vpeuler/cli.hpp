#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpeuler {

/// Command-line driver. Exit codes: 0 success, 2 argument error, 3 output
/// I/O error, 4 numeric failure (reported with the regime explanation).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vpeuler
