#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luroth/report.hpp"

namespace luroth {

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs `count` seeded cases of a property suite, appending one check per
/// property and case. Throws io::InputError for an unknown suite.
void run_suite(const std::string& name, std::uint64_t seed, std::size_t count, RunReport& report);

}  // namespace luroth
