#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symrange/sequence.hpp"

namespace symrange {

inline constexpr Index kDefaultWindow = Index{1} << 16;

/// The decreasing rearrangement mu(x) of |x| on Z_+.
///
/// `values()` holds mu(0..L-1), nonincreasing and strictly positive.  Past the
/// window, mu is either identically zero or equals the power-log `tail()`
/// evaluated at the same index.
class Rearrangement {
 public:
  Rearrangement() = default;
  Rearrangement(std::vector<double> values, std::optional<PowerLog> tail);

  std::span<const double> values() const { return values_; }
  const std::optional<PowerLog>& tail() const { return tail_; }
  Index size() const { return static_cast<Index>(values_.size()); }
  bool is_zero() const { return values_.empty() && !tail_; }
  bool has_finite_support() const { return !tail_.has_value(); }

  double operator()(Index n) const;
  /// mu(0..n-1), zero padded or continued by the tail.
  std::vector<double> window(Index n) const;
  Sequence as_sequence() const;

  bool operator==(const Rearrangement&) const = default;

 private:
  std::vector<double> values_;
  std::optional<PowerLog> tail_;
};

/// mu(x).  For finite support the result is exact; `window` is ignored.  For
/// analytic sequences the explicit part covers at least `window` indices and
/// extends until every remaining value is dominated by the monotone tail.
///
/// Throws DomainError when the head of an analytic sequence cannot be
/// separated from its tail within the explicit-term budget (including heads
/// with zero entries, whose rearrangement would shift the tail).
Rearrangement decreasing_rearrangement(const Sequence& x, Index window = kDefaultWindow);

/// mu of an explicit list of values.
Rearrangement decreasing_rearrangement(std::span<const double> values);

}  // namespace symrange
