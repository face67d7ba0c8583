#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k2gr::cli {

/// Runs the command line tool on `args` (program name excluded), writing all
/// output to `out`. Exit codes: 0 success, 2 malformed or invalid request,
/// 3 well-formed request outside the supported parameter ranges.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace k2gr::cli
