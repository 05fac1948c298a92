#include "ellsurf/report.hpp"

#include <algorithm>
#include <cmath>

namespace ellsurf {

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json rational_json(const mpq_class& r) {
  mpq_class c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ReportCase exact_case(std::string name, long long expected, long long observed) {
  return ReportCase{std::move(name), expected, observed, 0.0, expected == observed};
}

ReportCase exact_case(std::string name, const std::string& expected, const std::string& observed) {
  return ReportCase{std::move(name), expected, observed, 0.0, expected == observed};
}

ReportCase bool_case(std::string name, bool expected, bool observed) {
  return ReportCase{std::move(name), expected, observed, 0.0, expected == observed};
}

ReportCase numeric_case(std::string name, double expected, double observed, double tolerance) {
  const bool pass = std::isfinite(observed) && std::abs(expected - observed) <= tolerance;
  return ReportCase{std::move(name), expected, observed, tolerance, pass};
}

ReportCase complex_case(std::string name, cplx expected, cplx observed, double tolerance) {
  const double err = std::abs(expected - observed);
  const bool pass = std::isfinite(err) && err <= tolerance;
  return ReportCase{std::move(name), complex_json(expected), complex_json(observed), tolerance, pass};
}

bool RunReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const ReportCase& c) { return c.pass; });
}

Json RunReport::to_json() const {
  std::vector<const ReportCase*> sorted;
  for (const auto& c : cases) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ReportCase* a, const ReportCase* b) { return a->name < b->name; });
  Json list = Json::array();
  for (const auto* c : sorted)
    list.push_back(Json{{"name", c->name},
                        {"expected", c->expected},
                        {"observed", c->observed},
                        {"tolerance", c->tolerance},
                        {"pass", c->pass}});
  Json out = result;
  out["command"] = command;
  out["inputs"] = inputs;
  out["cases"] = std::move(list);
  out["seed"] = seed;
  out["wall_time_ms"] = wall_time_ms;
  out["pass"] = all_pass();
  return out;
}

}  // namespace ellsurf
