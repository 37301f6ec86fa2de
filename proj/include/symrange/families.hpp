#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "symrange/random.hpp"
#include "symrange/sequence.hpp"

namespace symrange {

enum class FamilyKind { RandomSigned, RandomNonnegDecreasing, PowerLogGrid, Spikes };

const char* to_string(FamilyKind k);
FamilyKind family_kind_from_string(std::string_view s);

struct FamilyOptions {
  /// Largest support of the random finite families.
  Index max_support = 64;
  /// Smallest support of the random finite families.
  Index min_support = 1;
};

/// The (alpha, beta) points PowerLogGrid walks, in order; (1, 0) comes first.
const std::vector<PowerLog>& power_log_grid();

/// Deterministic test families.  Finite families live on Z_+ with offset 0.
///  - RandomSigned: uniform, log-uniform or harmonic-like magnitudes with
///    random signs and sporadic zeros.
///  - RandomNonnegDecreasing: the same magnitudes, nonnegative and sorted
///    nonincreasing.
///  - PowerLogGrid: power_log_grid() cycled to `count` entries.
///  - Spikes: one to four isolated spikes of random sign and height.
std::vector<Sequence> generate_family(FamilyKind kind, int count, std::uint64_t seed, const FamilyOptions& opts = {});

/// One random magnitude profile of the given length (all entries >= 0).
std::vector<double> random_magnitudes(Rng& rng, Index length);

}  // namespace symrange
