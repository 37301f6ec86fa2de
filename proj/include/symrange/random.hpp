#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace symrange {

/// 64-bit FNV-1a; stable across platforms, used to derive per-suite seeds.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seeded generator with platform-independent variates (the standard
/// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream) : engine_(seed ^ fnv1a(stream)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin(double p_true = 0.5) { return uniform() < p_true; }

  /// Child generator for an independent sub-stream.
  Rng fork(std::string_view stream) { return Rng(engine_() ^ fnv1a(stream)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace symrange
