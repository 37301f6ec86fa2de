#pragma once

#include <limits>

#include "symrange/sequence.hpp"

namespace symrange {

/// A certified enclosure [lo, hi] of a real number.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return lo + 0.5 * (hi - lo); }
  double halfwidth() const { return 0.5 * (hi - lo); }

  static Bracket exact(double v) { return {v, v}; }
  Bracket operator+(const Bracket& o) const { return {lo + o.lo, hi + o.hi}; }
  Bracket scaled(double c) const { return c >= 0.0 ? Bracket{c * lo, c * hi} : Bracket{c * hi, c * lo}; }
};

struct TailOptions {
  /// Largest acceptable half-width of a returned bracket.
  double tolerance = 1e-12;
  /// Upper limit on explicitly summed terms before giving up.
  Index max_terms = Index{1} << 26;
};

/// Certified enclosure of sum_{k >= from} log(k+2)^b / (k+1)^a for a > 1,
/// b >= 0, from >= 0.  Throws DivergentTail when a <= 1.
///
/// Terms below the convexity threshold of the summand are added explicitly;
/// the remainder is enclosed between the trapezoid and midpoint bounds of the
/// integral, which is itself bounded through the upper incomplete gamma
/// function.
Bracket power_log_series_tail(double a, double b, Index from);

/// sup over integers n >= from of log(n+2)^b / (n+1)^a (a, b any reals).
/// Returns +inf when the supremum is infinite.
double power_log_sup(double a, double b, Index from);

/// Enclosure of sum_{k >= from} x(k)/k for from >= 1 and a power-log x.
Bracket power_log_over_k_tail(const PowerLog& x, Index from);

/// sum_{k >= n+1} x(k)/k for a half-line sequence x.  Exact for finite
/// support; for analytic tails the explicit part is extended until the
/// bracket half-width meets `opts.tolerance`.
Bracket tail_sum_over_k(const Sequence& x, Index n, const TailOptions& opts = {});

/// True when sum_k log(k+2)^b/(k+1)^a converges.
inline bool power_log_series_converges(double a) { return a > 1.0; }

}  // namespace symrange
