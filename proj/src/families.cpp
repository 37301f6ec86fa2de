#include "symrange/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace symrange {

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::RandomSigned: return "random_signed";
    case FamilyKind::RandomNonnegDecreasing: return "random_nonneg_decreasing";
    case FamilyKind::PowerLogGrid: return "power_log_grid";
    case FamilyKind::Spikes: return "spikes";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(std::string_view s) {
  for (auto k : {FamilyKind::RandomSigned, FamilyKind::RandomNonnegDecreasing, FamilyKind::PowerLogGrid,
                 FamilyKind::Spikes}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown family kind '" + std::string(s) + "'");
}

const std::vector<PowerLog>& power_log_grid() {
  static const std::vector<PowerLog> grid = [] {
    std::vector<PowerLog> g;
    for (double a : {1.0, 0.5, 0.75, 1.5, 2.0, 3.0}) {
      for (double b : {0.0, 0.5, 1.0, 2.0}) g.push_back({a, b, 1.0});
    }
    return g;
  }();
  return grid;
}

std::vector<double> random_magnitudes(Rng& rng, Index length) {
  std::vector<double> v(static_cast<std::size_t>(std::max<Index>(length, 0)));
  const int shape = static_cast<int>(rng.uniform_int(0, 2));
  for (auto& e : v) {
    switch (shape) {
      case 0: e = rng.uniform(); break;
      case 1: e = std::exp(rng.uniform(-8.0, 2.0)); break;
      default: e = 1.0 / static_cast<double>(rng.uniform_int(1, 4 * std::max<Index>(length, 1))); break;
    }
    if (rng.coin(0.1)) e = 0.0;
  }
  return v;
}

std::vector<Sequence> generate_family(FamilyKind kind, int count, std::uint64_t seed, const FamilyOptions& opts) {
  if (count < 1) throw std::invalid_argument("family count must be >= 1");
  if (opts.min_support < 1 || opts.max_support < opts.min_support) {
    throw std::invalid_argument("family support range is empty");
  }
  Rng rng(seed, to_string(kind));
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    switch (kind) {
      case FamilyKind::RandomSigned: {
        auto v = random_magnitudes(rng, rng.uniform_int(opts.min_support, opts.max_support));
        for (double& e : v) {
          if (rng.coin()) e = -e;
        }
        out.push_back(Sequence::finite(std::move(v)));
        break;
      }
      case FamilyKind::RandomNonnegDecreasing: {
        auto v = random_magnitudes(rng, rng.uniform_int(opts.min_support, opts.max_support));
        std::sort(v.begin(), v.end(), std::greater<>());
        if (v.front() == 0.0) v.front() = 1.0;
        out.push_back(Sequence::finite(std::move(v)));
        break;
      }
      case FamilyKind::PowerLogGrid: {
        const auto& g = power_log_grid()[static_cast<std::size_t>(i) % power_log_grid().size()];
        out.push_back(Sequence::power_log(g.alpha, g.beta, g.scale));
        break;
      }
      case FamilyKind::Spikes: {
        const Index span = std::max<Index>(opts.max_support, 1);
        std::vector<double> v(static_cast<std::size_t>(span), 0.0);
        const int spikes = static_cast<int>(rng.uniform_int(1, 4));
        for (int s = 0; s < spikes; ++s) {
          const double h = std::exp(rng.uniform(-2.0, 2.0));
          v[static_cast<std::size_t>(rng.uniform_int(0, span - 1))] = rng.coin() ? h : -h;
        }
        out.push_back(Sequence::finite(std::move(v)));
        break;
      }
    }
  }
  return out;
}

}  // namespace symrange
