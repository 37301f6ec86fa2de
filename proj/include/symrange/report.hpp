#pragma once

#include <json.hpp>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace symrange {

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);

struct CaseResult {
  std::string name;
  Status status = Status::Pass;
  std::optional<double> observed_constant;
  std::string detail;
  /// Reproduction data (seed, trial index, offending input) for failures.
  std::string witness;
};

/// Outcome of a batch of property checks.  Reports merge by concatenation,
/// so assembling them is associative.
struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  nlohmann::ordered_json environment = nlohmann::ordered_json::object();

  CaseResult& add(CaseResult c) { return cases.emplace_back(std::move(c)); }
  void merge(const VerificationReport& other);

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
  /// Observed constant of the named case; throws std::out_of_range if absent.
  double observed(const std::string& name) const;
  const CaseResult& find(const std::string& name) const;
};

/// Tracks the worst value seen together with where it occurred.
struct Extremum {
  double value = -std::numeric_limits<double>::infinity();
  std::string where;

  void update(double v, const std::string& w) {
    if (v > value) {
      value = v;
      where = w;
    }
  }
  template <class F>
  void update_lazy(double v, F&& describe) {
    if (v > value) {
      value = v;
      where = describe();
    }
  }
};

nlohmann::ordered_json to_json(const VerificationReport& report);
/// JSON value for a double; non-finite values become "inf", "-inf" or "nan".
nlohmann::ordered_json json_number(double v);

}  // namespace symrange
