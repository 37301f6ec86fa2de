#include "symrange/optrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "symrange/errors.hpp"
#include "symrange/harmonic.hpp"
#include "symrange/tail.hpp"

namespace symrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Rounding allowance of the window comparison, relative to (S mu(y))(n).
constexpr double kRoundingAllowance = 1e-12;

// c log(n)^b / n^a as n -> inf.
struct Asymptotic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

double finite_mass(const Rearrangement& mu) {
  double s = 0.0;
  for (auto it = mu.values().rbegin(); it != mu.values().rend(); ++it) s += *it;
  return s;
}

std::optional<Asymptotic> calderon_asymptotic(const Rearrangement& mu) {
  if (mu.is_zero()) return std::nullopt;
  if (!mu.tail()) return Asymptotic{1.0, 0.0, finite_mass(mu)};
  const PowerLog& g = *mu.tail();
  if (g.alpha < 1.0) return Asymptotic{g.alpha, g.beta, g.scale * (1.0 / (1.0 - g.alpha) + 1.0 / g.alpha)};
  if (g.alpha == 1.0) return Asymptotic{1.0, g.beta + 1.0, g.scale / (g.beta + 1.0)};
  const double mass = finite_mass(mu) + g.scale * power_log_series_tail(g.alpha, g.beta, mu.size()).mid();
  return Asymptotic{1.0, 0.0, mass};
}

// lim mu(n, x) / (S mu(y))(n) for a power-log tail of x.
double limit_ratio(const PowerLog& x, const std::optional<Asymptotic>& s) {
  if (!s || !(s->c > 0.0)) return kInf;
  if (x.alpha != s->a) return x.alpha > s->a ? 0.0 : kInf;
  if (x.beta != s->b) return x.beta < s->b ? 0.0 : kInf;
  return x.scale / s->c;
}

double grid_scale(int steps, int j) { return std::exp2(static_cast<double>(j) / steps); }

// Smallest grid exponent j with 2^(j/steps) >= kappa.
std::optional<int> grid_ceil(double kappa, const GridConfig& grid) {
  const int steps = grid.steps_per_octave;
  const int lo = grid.min_octave * steps;
  const int hi = grid.max_octave * steps;
  if (!std::isfinite(kappa)) return std::nullopt;
  if (kappa <= grid_scale(steps, lo)) return lo;
  double guess = std::ceil(std::log2(kappa) * steps);
  if (guess > hi + 1) return std::nullopt;
  int j = static_cast<int>(guess);
  while (j > lo && grid_scale(steps, j - 1) >= kappa) --j;
  while (grid_scale(steps, j) < kappa) ++j;
  if (j > hi) return std::nullopt;
  return j;
}

double upper_value(const NormValue& v) { return v.value + v.tail_halfwidth; }

}  // namespace

const char* to_string(TailArgument t) {
  switch (t) {
    case TailArgument::None: return "none";
    case TailArgument::FiniteSupportX: return "finite_support_x";
    case TailArgument::AnalyticComparison: return "analytic_comparison";
  }
  return "unknown";
}

GridConfig GridConfig::named(const std::string& name) {
  GridConfig g;
  if (name == "default") return g;
  if (name == "fine") {
    g.steps_per_octave = 8;
    return g;
  }
  if (name == "coarse") {
    g.steps_per_octave = 2;
    return g;
  }
  throw std::invalid_argument("unknown grid '" + name + "' (expected default, fine or coarse)");
}

DominationCertificate check_domination(const Sequence& x, const Sequence& y, Index window) {
  if (window < 1) throw std::invalid_argument("certificate window must be >= 1");
  DominationCertificate cert;
  cert.x = x;
  cert.y = y;
  const Rearrangement mx = decreasing_rearrangement(x, window);
  const Rearrangement my = decreasing_rearrangement(y, window);
  const Index w = std::max(window, mx.size());
  cert.window = w;

  OperatorOutput s;
  try {
    s = calderon(my, w);
  } catch (const DivergentTail& e) {
    throw DomainError(std::string("witness outside the domain of S: ") + e.what());
  }

  Index violations = 0;
  for (Index n = 0; n < w; ++n) {
    const double lhs = mx(n);
    const double rhs = s.at(n);
    if (lhs == 0.0) continue;
    cert.max_ratio = std::max(cert.max_ratio, rhs > 0.0 ? lhs / rhs : kInf);
    if (lhs > rhs - s.halfwidth_at(n) + kRoundingAllowance * rhs) {
      if (cert.first_violation < 0) cert.first_violation = n;
      ++violations;
    }
  }
  cert.window_verified = violations == 0;
  if (!cert.window_verified) {
    cert.detail = std::to_string(violations) + " violations on the window, first at n=" +
                  std::to_string(cert.first_violation);
    return cert;
  }

  if (!mx.tail()) {
    cert.tail_argument = TailArgument::FiniteSupportX;
    cert.detail = "mu(x) vanishes past index " + std::to_string(mx.size());
    return cert;
  }

  const double limit = limit_ratio(*mx.tail(), calderon_asymptotic(my));
  if (!(limit <= 1.0)) {
    cert.detail = "asymptotic ratio mu(x)/S mu(y) tends to " + std::to_string(limit);
    return cert;
  }
  bool nonincreasing = true;
  double prev = kInf;
  for (Index n = w / 2; n < w; ++n) {
    const double r = mx(n) / s.at(n);
    if (r > prev) nonincreasing = false;
    prev = r;
  }
  if (nonincreasing || prev <= limit) {
    cert.tail_argument = TailArgument::AnalyticComparison;
    cert.detail = "power-log asymptotics give limit ratio " + std::to_string(limit) +
                  (nonincreasing ? ", ratio nonincreasing on the last octave" : ", ratio below its limit at the window end");
  } else {
    cert.detail = "ratio " + std::to_string(prev) + " at the window end exceeds its limit " + std::to_string(limit) +
                  " and is not monotone on the last octave";
  }
  return cert;
}

WitnessSearch::WitnessSearch(SpaceSpec space, GridConfig grid) : space_(space), grid_(grid) {
  if (grid_.steps_per_octave < 1 || grid_.min_octave > grid_.max_octave || grid_.window < 1 ||
      grid_.max_verified < 1) {
    throw std::invalid_argument("invalid grid configuration");
  }
  const PowerLog gens[] = {{1.0, 0.0, 1.0}, {1.5, 0.0, 1.0}, {2.0, 0.0, 1.0},
                           {0.5, 0.0, 1.0}, {0.75, 0.0, 1.0}, {1.0, 0.5, 1.0}};
  for (const auto& g : gens) {
    const Rearrangement mu = decreasing_rearrangement(Sequence::power_log(g.alpha, g.beta), grid_.window);
    NormValue nv;
    try {
      nv = norm(mu, space_);
    } catch (const DivergentTail&) {
      continue;
    }
    if (!nv.is_finite() || !(nv.value > 0.0)) continue;
    generators_.push_back({g, upper_value(nv), calderon(mu, grid_.window)});
  }
}

FNormEstimate WitnessSearch::run(const Sequence& x, const std::vector<WitnessShape>& extra) const {
  const Rearrangement mx = decreasing_rearrangement(x, grid_.window);
  FNormEstimate est;
  if (space_.kind == SpaceKind::WeakL1) est.lower = weak_l1_f_lower_bound(mx);
  if (mx.is_zero()) {
    est.witness = check_domination(x, Sequence::zero(), grid_.window);
    est.shape = "zero";
    return est;
  }
  const Index w = std::max(grid_.window, mx.size());
  const std::vector<double> target = mx.window(w);

  struct Candidate {
    std::string name;
    Sequence unit;
    double unit_norm;
    int j;
    double value;
  };
  std::vector<Candidate> candidates;

  const auto consider = [&](const std::string& name, const Sequence& unit, double unit_norm, const OperatorOutput& s,
                            const std::optional<Asymptotic>& asym) {
    double kappa = 0.0;
    for (Index n = 0; n < w; ++n) {
      const double t = target[static_cast<std::size_t>(n)];
      if (t == 0.0) continue;
      const double sv = s.at(n) - s.halfwidth_at(n);
      kappa = std::max(kappa, sv > 0.0 ? t / sv : kInf);
    }
    if (mx.tail()) kappa = std::max(kappa, limit_ratio(*mx.tail(), asym));
    // Absorb the rounding allowance of the certificate check.
    const auto j = grid_ceil(kappa * (1.0 + 4e-16), grid_);
    if (!j) return;
    candidates.push_back({name, unit, unit_norm, *j, grid_scale(grid_.steps_per_octave, *j) * unit_norm});
  };
  const auto consider_profile = [&](const std::string& name, const Rearrangement& z) {
    NormValue nv;
    try {
      nv = norm(z, space_);
    } catch (const DivergentTail&) {
      return;
    }
    if (!nv.is_finite() || !(nv.value > 0.0)) return;
    consider(name, z.as_sequence(), upper_value(nv), calderon(z, w), calderon_asymptotic(z));
  };

  consider_profile("mu(x)", mx);
  const auto vals = mx.values();
  for (Index len = 1; len < mx.size(); len *= 2) {
    consider_profile("mu(x) truncated to " + std::to_string(len),
                     Rearrangement(std::vector<double>(vals.begin(), vals.begin() + len), std::nullopt));
  }
  for (const auto& g : generators_) {
    const std::string name = "power_log(" + std::to_string(g.g.alpha) + ", " + std::to_string(g.g.beta) + ")";
    const Sequence unit = Sequence::power_log(g.g.alpha, g.g.beta);
    const Rearrangement mu = decreasing_rearrangement(unit, grid_.window);
    if (w == grid_.window) {
      consider(name, unit, g.norm, g.s, calderon_asymptotic(mu));
    } else {
      consider(name, unit, g.norm, calderon(mu, w), calderon_asymptotic(mu));
    }
  }
  for (const auto& e : extra) consider_profile(e.name, e.profile);

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  const std::size_t tries = std::min(candidates.size(), static_cast<std::size_t>(grid_.max_verified));
  std::string last_failure = "no admissible shape";
  for (std::size_t i = 0; i < tries; ++i) {
    const auto& c = candidates[i];
    const double scale = grid_scale(grid_.steps_per_octave, c.j);
    const Sequence y = scaled(c.unit, scale);
    auto cert = check_domination(x, y, w);
    if (!cert.verified()) {
      last_failure = c.name + ": " + cert.detail;
      continue;
    }
    est.upper = upper_value(norm(y, space_, grid_.window));
    est.witness = std::move(cert);
    est.shape = c.name;
    est.scale = scale;
    return est;
  }
  throw NoWitnessFound("no verified witness among " + std::to_string(candidates.size()) + " candidates (" +
                       last_failure + ")");
}

FNormEstimate f_norm_upper(const Sequence& x, const SpaceSpec& space, const GridConfig& grid) {
  return WitnessSearch(space, grid).run(x);
}

double weak_l1_f_lower_bound(const Rearrangement& mu) {
  double best = 0.0;
  const auto v = mu.values();
  for (Index n = 0; n < mu.size(); ++n) {
    const double n1 = static_cast<double>(n) + 1.0;
    best = std::max(best, v[static_cast<std::size_t>(n)] * n1 / (harmonic_number(n + 1) + 1.0));
  }
  return best;
}

WeakL1Membership weak_l1_membership(const Sequence& x, Index window) {
  const Rearrangement mu = decreasing_rearrangement(x, window);
  const auto v = mu.values();
  double c = 0.0;
  for (Index n = 0; n < mu.size(); ++n) {
    const double t = static_cast<double>(n);
    c = std::max(c, v[static_cast<std::size_t>(n)] * (t + 1.0) / std::log(t + 2.0));
  }
  if (mu.tail()) {
    const PowerLog& g = *mu.tail();
    c = std::max(c, g.scale * power_log_sup(g.alpha - 1.0, g.beta - 1.0, mu.size()));
  }
  return {std::isfinite(c), c};
}

double harmonic_calderon_closed_form(Index n) {
  if (n < 0) throw std::invalid_argument("harmonic_calderon_closed_form: n must be >= 0");
  return (harmonic_number(n + 1) + 1.0) / (static_cast<double>(n) + 1.0);
}

}  // namespace symrange
