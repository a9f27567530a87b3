#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weierstab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Parses argv (argv[0] is the program name), runs the subcommand and
/// writes its result to `out`. Domain errors go to `err` as a JSON object
/// and return 1; usage errors return 2.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace weierstab::cli
