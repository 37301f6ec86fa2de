#pragma once

#include <span>
#include <vector>

#include "symrange/sequence.hpp"

namespace symrange::detail {

/// Largest circular transform length accepted.
inline constexpr Index kMaxTransformLength = Index{1} << 27;

/// Smallest power of two >= n.  Throws std::length_error above the limit.
Index transform_length(Index n);

/// Entries [first, first + count) of the linear convolution a * g, computed
/// by a zero-padded real circular convolution of length
/// transform_length(a.size() + g.size()).
std::vector<double> linear_convolution_segment(std::span<const double> a, std::span<const double> g, Index first,
                                               Index count);

}  // namespace symrange::detail
