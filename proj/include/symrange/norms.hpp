#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>

#include "symrange/rearrangement.hpp"
#include "symrange/report.hpp"
#include "symrange/sequence.hpp"

namespace symrange {

/// phi(t) = log(1+t).
struct Log1pPhi {
  bool operator==(const Log1pPhi&) const = default;
};
/// phi(t) = t^theta, theta in (0, 1].
struct PowerPhi {
  double theta = 1.0;
  bool operator==(const PowerPhi&) const = default;
};
using PhiTemplate = std::variant<Log1pPhi, PowerPhi>;

/// phi(n+1) - phi(n).
double phi_increment(const PhiTemplate& phi, Index n);

enum class SpaceKind { Lp, WeakL1, LLog, LorentzPhi, Marcinkiewicz1Inf, SumWeakL1LInf };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::WeakL1;
  double p = 1.0;
  PhiTemplate phi = Log1pPhi{};

  static SpaceSpec lp(double p);
  static SpaceSpec weak_l1() { return {SpaceKind::WeakL1}; }
  static SpaceSpec llog() { return {SpaceKind::LLog}; }
  static SpaceSpec lorentz(PhiTemplate phi);
  static SpaceSpec marcinkiewicz() { return {SpaceKind::Marcinkiewicz1Inf}; }
  static SpaceSpec sum_weak_l1_linf() { return {SpaceKind::SumWeakL1LInf}; }

  std::string name() const;
  bool operator==(const SpaceSpec&) const = default;
};

/// A (quasi-)norm value with a certified enclosure of the truncation error.
/// `value` is +inf when the norm is infinite.
struct NormValue {
  double value = 0.0;
  double tail_halfwidth = 0.0;
  Index window = 0;

  bool is_finite() const { return std::isfinite(value); }
  static NormValue infinite(Index window) {
    return {std::numeric_limits<double>::infinity(), 0.0, window};
  }
};

// Every norm is a functional of mu(x).  The Sequence overloads rearrange on
// the window first; analytic sequences continue with their power-log tail.

NormValue lp_norm(const Rearrangement& mu, double p);
NormValue lp_norm(const Sequence& x, double p, Index window = kDefaultWindow);

NormValue linf_norm(const Rearrangement& mu);

/// sup_n (n+1) mu(n, x).
NormValue weak_l1_quasinorm(const Rearrangement& mu);
NormValue weak_l1_quasinorm(const Sequence& x, Index window = kDefaultWindow);

/// sum_n mu(n, x)/(n+1).
NormValue llog_norm(const Rearrangement& mu);
NormValue llog_norm(const Sequence& x, Index window = kDefaultWindow);

/// sum_n mu(n, x) (phi(n+1) - phi(n)).
NormValue lorentz_phi_norm(const Rearrangement& mu, const PhiTemplate& phi);
NormValue lorentz_phi_norm(const Sequence& x, const PhiTemplate& phi, Index window = kDefaultWindow);

/// sup_n (1/log(2+n)) sum_{k<=n} mu(k, x).
NormValue marcinkiewicz_norm(const Rearrangement& mu);
NormValue marcinkiewicz_norm(const Sequence& x, Index window = kDefaultWindow);

/// inf{ ||x1||_{1,inf} + ||x2||_inf : x = x1 + x2 } scanned over truncation
/// splits at heights t in {0} and the distinct values of mu(x).  For a fixed
/// height the truncation is the best split, and the cost is nonincreasing in
/// t between consecutive values of mu(x), so for finite support the scan
/// attains the infimum.  With an analytic tail, heights below the window are
/// represented by t = 0 only and the result is an upper bound.
NormValue sum_space_quasinorm(const Rearrangement& mu);
NormValue sum_space_quasinorm(const Sequence& x, Index window = kDefaultWindow);

NormValue norm(const Rearrangement& mu, const SpaceSpec& space);
NormValue norm(const Sequence& x, const SpaceSpec& space, Index window = kDefaultWindow);

/// Randomized check of the symmetric-space axioms for `space`: monotonicity,
/// rearrangement invariance, homogeneity, and the quasi-triangle inequality
/// with its empirical modulus reported as the observed constant of case
/// "quasi_triangle_modulus".
VerificationReport axiom_check(const SpaceSpec& space, int trials, std::uint64_t seed);

}  // namespace symrange
