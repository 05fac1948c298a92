#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ellsurf/special_functions.hpp"

namespace ellsurf {

using Json = nlohmann::json;

Json complex_json(cplx z);
Json rational_json(const mpq_class& r);

// pass iff |expected - observed| <= tolerance, or equality for exact cases
struct ReportCase {
  std::string name;
  Json expected;
  Json observed;
  double tolerance = 0.0;
  bool pass = false;
};

ReportCase exact_case(std::string name, long long expected, long long observed);
ReportCase exact_case(std::string name, const std::string& expected, const std::string& observed);
ReportCase bool_case(std::string name, bool expected, bool observed);
ReportCase numeric_case(std::string name, double expected, double observed, double tolerance);
ReportCase complex_case(std::string name, cplx expected, cplx observed, double tolerance);
// an error measure that must stay below the bound
inline ReportCase bound_case(std::string name, double error, double bound) {
  return numeric_case(std::move(name), 0.0, error, bound);
}

struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<ReportCase> cases;
  std::uint64_t seed = 0;
  long long wall_time_ms = 0;
  Json result = Json::object();  // command specific top-level fields

  bool all_pass() const;
  // cases sorted by name; keys sorted
  Json to_json() const;
};

}  // namespace ellsurf
