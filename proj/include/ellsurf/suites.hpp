#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ellsurf/report.hpp"

namespace ellsurf {

const std::vector<std::string>& suite_names();

// Throws UsageError for an unknown suite. A case that throws is recorded as
// a failure carrying the error text.
std::vector<ReportCase> run_suite(std::string_view name, std::uint64_t seed);

}  // namespace ellsurf
