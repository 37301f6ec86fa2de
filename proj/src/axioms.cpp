#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "symrange/norms.hpp"
#include "symrange/random.hpp"

namespace symrange {

namespace {

std::vector<double> random_values(Rng& rng, Index max_support) {
  const Index s = rng.uniform_int(1, max_support);
  const int shape = static_cast<int>(rng.uniform_int(0, 2));
  std::vector<double> v(static_cast<std::size_t>(s));
  for (Index k = 0; k < s; ++k) {
    double mag;
    switch (shape) {
      case 0: mag = rng.uniform(); break;
      case 1: mag = 1.0 / (static_cast<double>(rng.uniform_int(0, 4 * s)) + 1.0); break;
      default: mag = std::exp(rng.uniform(-6.0, 3.0)); break;
    }
    if (rng.coin(0.15)) mag = 0.0;
    v[static_cast<std::size_t>(k)] = rng.coin() ? mag : -mag;
  }
  return v;
}

double quasi_triangle_bound(const SpaceSpec& space) {
  switch (space.kind) {
    case SpaceKind::WeakL1: return 2.0;
    // Modulus 2 of the weak-l1 part, modulus 1 of the sup norm.
    case SpaceKind::SumWeakL1LInf: return 2.0;
    default: return 1.0;
  }
}

std::string trial_tag(std::uint64_t seed, int trial) {
  return "seed=" + std::to_string(seed) + " trial=" + std::to_string(trial);
}

}  // namespace

VerificationReport axiom_check(const SpaceSpec& space, int trials, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "axioms:" + space.name();
  report.environment["space"] = space.name();
  report.environment["trials"] = trials;
  report.environment["seed"] = seed;
  constexpr double kRel = 1e-12;
  constexpr Index kMaxSupport = 48;

  {
    Rng rng(seed, "axioms/monotonicity");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      const auto xv = random_values(rng, kMaxSupport);
      auto yv = xv;
      for (double& e : yv) {
        const double r = rng.uniform();
        e *= r < 0.2 ? 0.0 : r > 0.8 ? 1.0 : rng.uniform();
      }
      const double nx = norm(decreasing_rearrangement(xv), space).value;
      const double ny = norm(decreasing_rearrangement(yv), space).value;
      worst.update(nx > 0.0 ? ny / nx : (ny > 0.0 ? std::numeric_limits<double>::infinity() : 0.0), trial_tag(seed, t));
    }
    const bool ok = trials == 0 || worst.value <= 1.0 + kRel;
    report.add({"monotonicity", ok ? Status::Pass : Status::Fail, std::max(worst.value, 0.0),
                "max ||y||/||x|| over |y| <= |x|", ok ? "" : worst.where});
  }

  {
    Rng rng(seed, "axioms/rearrangement");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      const auto xv = random_values(rng, kMaxSupport);
      auto yv = xv;
      for (std::size_t i = yv.size(); i > 1; --i) {
        std::swap(yv[i - 1], yv[static_cast<std::size_t>(rng.uniform_int(0, static_cast<Index>(i) - 1))]);
      }
      for (double& e : yv) {
        if (rng.coin()) e = -e;
      }
      const Sequence x = Sequence::finite(xv, rng.uniform_int(0, 16));
      const Sequence y = Sequence::finite(yv, rng.uniform_int(-16, 16), IndexDomain::Line);
      const double d = std::fabs(norm(x, space).value - norm(y, space).value);
      worst.update(d, trial_tag(seed, t));
    }
    const bool ok = trials == 0 || worst.value == 0.0;
    report.add({"rearrangement_invariance", ok ? Status::Pass : Status::Fail, std::max(worst.value, 0.0),
                "max |norm(x) - norm(y)| over equimeasurable pairs", ok ? "" : worst.where});
  }

  {
    Rng rng(seed, "axioms/homogeneity");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      const auto xv = random_values(rng, kMaxSupport);
      const double c = rng.uniform(-8.0, 8.0);
      auto yv = xv;
      for (double& e : yv) e *= c;
      const double nx = norm(decreasing_rearrangement(xv), space).value;
      const double ny = norm(decreasing_rearrangement(yv), space).value;
      const double ref = std::fabs(c) * nx;
      worst.update(ref > 0.0 ? std::fabs(ny - ref) / ref : std::fabs(ny), trial_tag(seed, t));
    }
    const bool ok = trials == 0 || worst.value <= kRel;
    report.add({"homogeneity", ok ? Status::Pass : Status::Fail, std::max(worst.value, 0.0),
                "max relative deviation of ||c x|| from |c| ||x||", ok ? "" : worst.where});
  }

  {
    Rng rng(seed, "axioms/quasi_triangle");
    Extremum worst;
    const auto probe = [&](const std::vector<double>& a, const std::vector<double>& b, Index shift,
                           const std::string& tag) {
      const Sequence x = Sequence::finite(a);
      const Sequence y = Sequence::finite(b, shift);
      const double denom = norm(x, space).value + norm(y, space).value;
      if (denom <= 0.0) return;
      worst.update(norm(add_scaled(x, 1.0, y, 1.0), space).value / denom, tag);
    };
    for (int t = 0; t < trials; ++t) {
      const auto a = random_values(rng, kMaxSupport);
      const auto b = random_values(rng, kMaxSupport);
      probe(a, b, rng.uniform_int(0, kMaxSupport), trial_tag(seed, t));
    }
    // Opposed harmonic profiles push the weak-l1 modulus towards 2.
    for (Index k : {8, 64, 512, 4096}) {
      std::vector<double> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
      for (Index i = 0; i < k; ++i) {
        a[static_cast<std::size_t>(i)] = 1.0 / (static_cast<double>(i) + 1.0);
        b[static_cast<std::size_t>(i)] = 1.0 / static_cast<double>(k - i);
      }
      probe(a, b, 0, "opposed harmonic pair K=" + std::to_string(k));
    }
    const double bound = quasi_triangle_bound(space);
    const bool ok = worst.value <= bound * (1.0 + kRel);
    report.add({"quasi_triangle_modulus", ok ? Status::Pass : Status::Fail, std::max(worst.value, 0.0),
                "max ||x+y||/(||x||+||y||); expected at most " + std::to_string(bound), worst.where});
  }
  return report;
}

}  // namespace symrange
