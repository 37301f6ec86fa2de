#pragma once

#include "symrange/sequence.hpp"

namespace symrange {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// H_m = sum_{j=1}^m 1/j.  Direct summation for small m, otherwise the
/// asymptotic expansion log m + gamma + 1/(2m) - 1/(12m^2) + 1/(120m^4)
/// - 1/(252m^6), whose remainder is below 1/(240 m^8).
double harmonic_number(Index m);

}  // namespace symrange
