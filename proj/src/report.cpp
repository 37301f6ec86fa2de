#include "symrange/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symrange {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

void VerificationReport::merge(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

const CaseResult& VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.name == name; });
  if (it == cases.end()) throw std::out_of_range("no case named " + name + " in suite " + suite);
  return *it;
}

double VerificationReport::observed(const std::string& name) const {
  const auto& c = find(name);
  if (!c.observed_constant) throw std::out_of_range("case " + name + " has no observed constant");
  return *c.observed_constant;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["environment"] = report.environment;
  j["summary"] = {{"pass", report.count(Status::Pass)},
                  {"fail", report.count(Status::Fail)},
                  {"inconclusive", report.count(Status::Inconclusive)}};
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["observed_constant"] = c.observed_constant ? json_number(*c.observed_constant) : nlohmann::ordered_json();
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    cases.push_back(std::move(e));
  }
  return j;
}

}  // namespace symrange
