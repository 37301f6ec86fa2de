#include "symrange/tail.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "symrange/errors.hpp"

namespace symrange {

namespace {

constexpr Index kThresholdLimit = Index{1} << 28;

double power_log_term(double a, double b, Index k) {
  const double t = static_cast<double>(k);
  const double num = b == 0.0 ? 1.0 : std::pow(std::log(t + 2.0), b);
  return num / std::pow(t + 1.0, a);
}

// int_U^inf log(u)^b u^{-a} du for U > 1, a > 1, b > -1.
double log_power_integral(double a, double b, double u) {
  if (b == 0.0) return std::pow(u, 1.0 - a) / (a - 1.0);
  const double z = (a - 1.0) * std::log(u);
  return boost::math::tgamma(b + 1.0, z) / std::pow(a - 1.0, b + 1.0);
}

// Enclosure of int_X^inf log(t+1)^b t^{-a} dt.  With L = log t and
// log(t+1) = L + d, d in [1/(t+1), 1/t], the mean value theorem gives
// (L+d)^b = L^b + b d xi^{b-1} with xi in [L, L+d], and xi^{b-1} lies within a
// factor r = (1 + 1/(X log X))^|b-1| of L^{b-1}.
Bracket shifted_log_power_integral(double a, double b, double x) {
  const double base = log_power_integral(a, b, x);
  if (b == 0.0) return Bracket::exact(base);
  const double c = b * log_power_integral(a + 1.0, b - 1.0, x);
  const double r = std::pow(1.0 + 1.0 / (x * std::log(x)), std::fabs(b - 1.0));
  return {base + c * (x / (x + 1.0)) / r, base + c * r};
}

// Smallest index from which log(t+2)^b/(t+1)^a is convex on [M - 1/2, inf).
Index convex_from(double a, double b) {
  if (b == 0.0) return 1;
  const double root = (b + std::sqrt(b * b + 4.0 * a * b)) / (2.0 * a);
  if (root > 40.0) return kThresholdLimit * 2;
  const double t = std::exp(root) - 2.0;
  return std::max<Index>(1, static_cast<Index>(std::ceil(t + 0.5)));
}

}  // namespace

Bracket power_log_series_tail(double a, double b, Index from) {
  if (!power_log_series_converges(a)) {
    throw DivergentTail("series sum log(k+2)^" + std::to_string(b) + "/(k+1)^" + std::to_string(a) +
                        " diverges");
  }
  if (from < 0) throw std::invalid_argument("power_log_series_tail: negative start index");
  const Index m = std::max(from, convex_from(a, b));
  if (m - from > kThresholdLimit) {
    throw DomainError("power-log summand convex only beyond index " + std::to_string(m));
  }
  double head = 0.0;
  for (Index k = m - 1; k >= from; --k) head += power_log_term(a, b, k);

  const double md = static_cast<double>(m);
  const double lower = shifted_log_power_integral(a, b, md + 1.0).lo + 0.5 * power_log_term(a, b, m);
  const double upper = shifted_log_power_integral(a, b, md + 0.5).hi;
  Bracket out{head + lower, head + upper};
  if (out.hi < out.lo) out.hi = out.lo;
  return out;
}

double power_log_sup(double a, double b, Index from) {
  from = std::max<Index>(from, 0);
  if (a < 0.0 || (a == 0.0 && b > 0.0)) return std::numeric_limits<double>::infinity();
  if (a == 0.0 && b == 0.0) return 1.0;
  if (b <= 0.0) return power_log_term(a, b, from);
  // a > 0, b > 0: unimodal, increasing up to some t* with log(t*+2) <= b/a.
  if (b / a > 40.0) return std::numeric_limits<double>::infinity();
  const double t_peak_bound = std::exp(b / a) - 2.0;
  if (static_cast<double>(from) >= t_peak_bound) return power_log_term(a, b, from);
  Index lo = from;
  Index hi = static_cast<Index>(std::ceil(t_peak_bound)) + 1;
  while (hi - lo > 2) {
    const Index m1 = lo + (hi - lo) / 3;
    const Index m2 = hi - (hi - lo) / 3;
    if (power_log_term(a, b, m1) < power_log_term(a, b, m2)) {
      lo = m1 + 1;
    } else {
      hi = m2;
    }
  }
  double best = 0.0;
  for (Index k = lo; k <= hi; ++k) best = std::max(best, power_log_term(a, b, k));
  return best;
}

Bracket power_log_over_k_tail(const PowerLog& x, Index from) {
  if (from < 1) throw std::invalid_argument("power_log_over_k_tail: start index must be >= 1");
  // x(k)/k = x(k)/(k+1) + x(k)/(k+1)^2 + x(k)/(k(k+1)^2), and the last term
  // lies within [1, 1 + 1/from] times x(k)/(k+1)^3.
  const Bracket first = power_log_series_tail(x.alpha + 1.0, x.beta, from) +
                        power_log_series_tail(x.alpha + 2.0, x.beta, from);
  const Bracket third = power_log_series_tail(x.alpha + 3.0, x.beta, from);
  const Bracket rest{third.lo, third.hi * (1.0 + 1.0 / static_cast<double>(from))};
  return (first + rest).scaled(x.scale);
}

Bracket tail_sum_over_k(const Sequence& x, Index n, const TailOptions& opts) {
  if (x.domain() != IndexDomain::HalfLine) throw DomainError("tail_sum_over_k needs a half-line sequence");
  if (n < 0) throw std::invalid_argument("tail_sum_over_k: n must be >= 0");
  const Index start = n + 1;
  if (x.is_finite()) {
    double s = 0.0;
    for (Index k = x.explicit_end() - 1; k >= std::max(start, x.explicit_begin()); --k) {
      s += x(k) / static_cast<double>(k);
    }
    return Bracket::exact(s);
  }
  const auto& body = x.analytic_body();
  const Index head_end = static_cast<Index>(body.head.size());
  double explicit_sum = 0.0;
  for (Index k = head_end - 1; k >= start; --k) explicit_sum += body.head[static_cast<std::size_t>(k)] / static_cast<double>(k);

  Index m = std::max(start, head_end);
  Index next = std::max<Index>(m, 1024);
  for (;;) {
    double chunk = 0.0;
    for (Index k = next - 1; k >= m; --k) chunk += body.tail(k) / static_cast<double>(k);
    explicit_sum += chunk;
    m = next;
    const Bracket rest = power_log_over_k_tail(body.tail, m);
    if (rest.halfwidth() <= opts.tolerance) return Bracket{explicit_sum + rest.lo, explicit_sum + rest.hi};
    if (m > opts.max_terms) {
      throw ToleranceNotMet("tail bracket half-width " + std::to_string(rest.halfwidth()) +
                            " above tolerance after " + std::to_string(m) + " terms");
    }
    next = 2 * m;
  }
}

}  // namespace symrange
