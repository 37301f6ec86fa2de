#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "symrange/report.hpp"
#include "symrange/sequence.hpp"

namespace symrange {

struct RunConfig {
  std::uint64_t seed = 1;
  Index window = 65536;
  /// 0 keeps each property's own trial count; a positive value overrides all.
  int trials = 0;
  double tolerance_exact = 1e-12;
  double tolerance_fast = 1e-9;
  std::filesystem::path output_dir;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
  int trials_or(int fallback) const { return trials > 0 ? trials : fallback; }
};

const std::vector<std::string>& suite_names();

/// Runs the property catalog of one module ("core", "norms", "operators",
/// "optrange") or all of them ("all").  Deterministic in the config.
/// Throws std::invalid_argument for unknown suite names.
VerificationReport run_suite(const std::string& name, const RunConfig& config);

}  // namespace symrange
