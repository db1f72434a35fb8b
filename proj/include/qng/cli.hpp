#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qng::cli {

/// Exit codes: 0 success, 1 validation error, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Parse a value or "a:b:n" range spec into a grid.
std::vector<double> parse_range(const std::string& spec);

}  // namespace qng::cli
