#pragma once

// Command-line front end. Every subcommand writes one JSON report to `out`.
// Exit codes: 0 pass, 1 criterion failure, 2 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace axial {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace axial
