// Command line driver and machine-readable run reports.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quipot/ginzburg.hpp"

namespace quipot {

inline constexpr const char* kVersion = "0.1.0";

std::string sha256_hex(const std::string& data);

// The full presentation in human-readable form: header, generator degrees,
// differential values.
std::string gamma_text(const DgPresentation& pres);

// Entry point shared by main() and the tests.  args excludes argv[0].
// Exit codes: 0 all checks pass, 1 a check failed (invalid potential,
// d^2 != 0, infinite dimension, violated orbit identity), 2 undetermined
// within the configured bounds, 3 unusable input (parse error, unknown
// names, unsupported scope, bad command line).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quipot
