#pragma once

#include <cstdint>
#include <string>

#include "luroth/report.hpp"

namespace luroth {

/// Q values, F, and Psi by both routes for a seven-point configuration.
RunReport cmd_psi(const std::string& input_text);

/// Conic, cubic, branch quartic, closed-form quartic, fifth line and
/// pentalateral for Roberts data.
RunReport cmd_luroth(const std::string& input_text);

/// Runs a named property suite.
RunReport cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t count);

/// Re-parses a JSON report written by cmd_luroth and re-checks it.
RunReport cmd_verify_report(const std::string& report_text);

}  // namespace luroth
