#include "symrange/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace symrange {

namespace {
constexpr Index kDirectLimit = 256;
}

double harmonic_number(Index m) {
  if (m < 0) throw std::invalid_argument("harmonic_number: m must be >= 0");
  if (m <= kDirectLimit) {
    double s = 0.0;
    for (Index j = m; j >= 1; --j) s += 1.0 / static_cast<double>(j);
    return s;
  }
  const double x = static_cast<double>(m);
  const double inv2 = 1.0 / (x * x);
  const double series = inv2 * (-1.0 / 12.0 + inv2 * (1.0 / 120.0 - inv2 / 252.0));
  return std::log(x) + kEulerGamma + 0.5 / x + series;
}

}  // namespace symrange
