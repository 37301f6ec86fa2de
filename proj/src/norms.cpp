#include "symrange/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "symrange/errors.hpp"
#include "symrange/tail.hpp"

namespace symrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NormValue from_bracket(double window_part, Bracket tail, Index window) {
  const Bracket total{window_part + tail.lo, window_part + tail.hi};
  return {total.mid(), total.halfwidth(), window};
}

// Applies a monotone map f to both ends of the enclosure value +- halfwidth.
template <class F>
NormValue map_enclosure(double lo, double hi, Index window, F&& f) {
  const Bracket out{f(lo), f(hi)};
  return {out.mid(), out.halfwidth(), window};
}

}  // namespace

double phi_increment(const PhiTemplate& phi, Index n) {
  if (std::holds_alternative<Log1pPhi>(phi)) return std::log1p(1.0 / (static_cast<double>(n) + 1.0));
  const double theta = std::get<PowerPhi>(phi).theta;
  if (theta == 1.0) return 1.0;
  const double t = static_cast<double>(n);
  return std::pow(t + 1.0, theta) - std::pow(t, theta);
}

SpaceSpec SpaceSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp space needs finite p >= 1");
  SpaceSpec s{SpaceKind::Lp};
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::lorentz(PhiTemplate phi) {
  if (const auto* pw = std::get_if<PowerPhi>(&phi)) {
    if (!(pw->theta > 0.0 && pw->theta <= 1.0)) throw std::invalid_argument("power phi needs theta in (0, 1]");
  }
  SpaceSpec s{SpaceKind::LorentzPhi};
  s.phi = phi;
  return s;
}

std::string SpaceSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case SpaceKind::Lp: os << "lp(" << p << ")"; break;
    case SpaceKind::WeakL1: os << "weak_l1"; break;
    case SpaceKind::LLog: os << "llog"; break;
    case SpaceKind::LorentzPhi:
      if (std::holds_alternative<Log1pPhi>(phi)) {
        os << "lorentz_phi(log1p)";
      } else {
        os << "lorentz_phi(power " << std::get<PowerPhi>(phi).theta << ")";
      }
      break;
    case SpaceKind::Marcinkiewicz1Inf: os << "m1inf"; break;
    case SpaceKind::SumWeakL1LInf: os << "sum_weakl1_linf"; break;
  }
  return os.str();
}

NormValue lp_norm(const Rearrangement& mu, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm needs finite p >= 1");
  const Index w = mu.size();
  const auto v = mu.values();
  double s = 0.0;
  for (Index n = w - 1; n >= 0; --n) {
    const double t = v[static_cast<std::size_t>(n)];
    s += p == 1.0 ? t : p == 2.0 ? t * t : std::pow(t, p);
  }
  const auto root = [p](double t) { return p == 1.0 ? t : p == 2.0 ? std::sqrt(t) : std::pow(t, 1.0 / p); };
  if (!mu.tail()) return {root(s), 0.0, w};
  const PowerLog& g = *mu.tail();
  const Bracket tail = power_log_series_tail(g.alpha * p, g.beta * p, w).scaled(std::pow(g.scale, p));
  return map_enclosure(s + tail.lo, s + tail.hi, w, root);
}

NormValue lp_norm(const Sequence& x, double p, Index window) {
  return lp_norm(decreasing_rearrangement(x, window), p);
}

NormValue linf_norm(const Rearrangement& mu) { return {mu(0), 0.0, mu.size()}; }

NormValue weak_l1_quasinorm(const Rearrangement& mu) {
  const Index w = mu.size();
  const auto v = mu.values();
  double best = 0.0;
  for (Index n = 0; n < w; ++n) best = std::max(best, (static_cast<double>(n) + 1.0) * v[static_cast<std::size_t>(n)]);
  if (mu.tail()) {
    const PowerLog& g = *mu.tail();
    const double s = power_log_sup(g.alpha - 1.0, g.beta, w);
    if (!std::isfinite(s)) return NormValue::infinite(w);
    best = std::max(best, g.scale * s);
  }
  return {best, 0.0, w};
}

NormValue weak_l1_quasinorm(const Sequence& x, Index window) {
  return weak_l1_quasinorm(decreasing_rearrangement(x, window));
}

NormValue llog_norm(const Rearrangement& mu) {
  const Index w = mu.size();
  const auto v = mu.values();
  double s = 0.0;
  for (Index n = w - 1; n >= 0; --n) s += v[static_cast<std::size_t>(n)] / (static_cast<double>(n) + 1.0);
  if (!mu.tail()) return {s, 0.0, w};
  const PowerLog& g = *mu.tail();
  return from_bracket(s, power_log_series_tail(g.alpha + 1.0, g.beta, w).scaled(g.scale), w);
}

NormValue llog_norm(const Sequence& x, Index window) { return llog_norm(decreasing_rearrangement(x, window)); }

NormValue lorentz_phi_norm(const Rearrangement& mu, const PhiTemplate& phi) {
  const Index w = mu.size();
  const auto v = mu.values();
  double s = 0.0;
  for (Index n = w - 1; n >= 0; --n) s += v[static_cast<std::size_t>(n)] * phi_increment(phi, n);
  if (!mu.tail()) return {s, 0.0, w};

  // The tail starts at w >= 1, where the increments are squeezed between
  // power-law terms.
  const PowerLog& g = *mu.tail();
  Bracket tail;
  if (std::holds_alternative<Log1pPhi>(phi)) {
    // t - t^2/2 <= log(1+t) <= t with t = 1/(n+1).
    const Bracket first = power_log_series_tail(g.alpha + 1.0, g.beta, w);
    const Bracket second = power_log_series_tail(g.alpha + 2.0, g.beta, w);
    tail = {std::max(0.0, first.lo - 0.5 * second.hi), first.hi};
  } else {
    const double theta = std::get<PowerPhi>(phi).theta;
    if (theta == 1.0) {
      tail = power_log_series_tail(g.alpha, g.beta, w);
    } else {
      // theta (n+1)^(theta-1) <= increment <= theta n^(theta-1).
      const Bracket b = power_log_series_tail(g.alpha + 1.0 - theta, g.beta, w);
      const double widen = std::pow(1.0 + 1.0 / static_cast<double>(w), 1.0 - theta);
      tail = Bracket{b.lo, b.hi * widen}.scaled(theta);
    }
  }
  return from_bracket(s, tail.scaled(g.scale), w);
}

NormValue lorentz_phi_norm(const Sequence& x, const PhiTemplate& phi, Index window) {
  return lorentz_phi_norm(decreasing_rearrangement(x, window), phi);
}

NormValue marcinkiewicz_norm(const Rearrangement& mu) {
  const Index w = mu.size();
  const auto v = mu.values();
  double partial = 0.0;
  double best = 0.0;
  for (Index n = 0; n < w; ++n) {
    partial += v[static_cast<std::size_t>(n)];
    best = std::max(best, partial / std::log(static_cast<double>(n) + 2.0));
  }
  if (!mu.tail()) return {best, 0.0, w};

  const PowerLog& g = *mu.tail();
  if (g.alpha < 1.0 || (g.alpha == 1.0 && g.beta > 0.0)) return NormValue::infinite(w);
  const double wd = static_cast<double>(w);
  double tail_bound;
  if (g.alpha == 1.0) {
    // Partial sums past the window grow by at most scale*log((n+1)/w).
    const double excess = partial - g.scale * std::log(wd);
    tail_bound = g.scale + std::max(excess, 0.0) / std::log(wd + 2.0);
  } else {
    tail_bound = (partial + g.scale * power_log_series_tail(g.alpha, g.beta, w).hi) / std::log(wd + 2.0);
  }
  if (tail_bound <= best) return {best, 0.0, w};
  return {0.5 * (best + tail_bound), 0.5 * (tail_bound - best), w};
}

NormValue marcinkiewicz_norm(const Sequence& x, Index window) {
  return marcinkiewicz_norm(decreasing_rearrangement(x, window));
}

NormValue sum_space_quasinorm(const Rearrangement& mu) {
  // Splitting at height t gives ||x1||_{1,inf} = max_{n<j} (n+1)(mu(n) - t)
  // where j is the first index with mu(j) <= t.  Maximising the affine
  // functional Y_n - t X_n over the points (n+1, (n+1)mu(n)) only needs their
  // upper convex hull, which grows incrementally since X is increasing.
  const Index w = mu.size();
  const auto v = mu.values();
  double best = weak_l1_quasinorm(mu).value;

  struct Pt {
    double x, y;
  };
  std::vector<Pt> hull;
  hull.reserve(static_cast<std::size_t>(w));
  const auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  for (Index j = 0; j < w; ++j) {
    const double t = v[static_cast<std::size_t>(j)];
    if (j == 0 || t < v[static_cast<std::size_t>(j - 1)]) {
      double lift = 0.0;
      if (!hull.empty()) {
        std::size_t lo = 0;
        std::size_t hi = hull.size() - 1;
        while (lo < hi) {
          const std::size_t mid = (lo + hi) / 2;
          const double gain = (hull[mid + 1].y - hull[mid].y) - t * (hull[mid + 1].x - hull[mid].x);
          if (gain > 0.0) {
            lo = mid + 1;
          } else {
            hi = mid;
          }
        }
        lift = std::max(0.0, hull[lo].y - t * hull[lo].x);
      }
      best = std::min(best, t + lift);
    }
    const double xn = static_cast<double>(j) + 1.0;
    const Pt p{xn, xn * t};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  return {best, 0.0, w};
}

NormValue sum_space_quasinorm(const Sequence& x, Index window) {
  return sum_space_quasinorm(decreasing_rearrangement(x, window));
}

NormValue norm(const Rearrangement& mu, const SpaceSpec& space) {
  switch (space.kind) {
    case SpaceKind::Lp: return lp_norm(mu, space.p);
    case SpaceKind::WeakL1: return weak_l1_quasinorm(mu);
    case SpaceKind::LLog: return llog_norm(mu);
    case SpaceKind::LorentzPhi: return lorentz_phi_norm(mu, space.phi);
    case SpaceKind::Marcinkiewicz1Inf: return marcinkiewicz_norm(mu);
    case SpaceKind::SumWeakL1LInf: return sum_space_quasinorm(mu);
  }
  throw std::invalid_argument("unknown space kind");
}

NormValue norm(const Sequence& x, const SpaceSpec& space, Index window) {
  return norm(decreasing_rearrangement(x, window), space);
}

}  // namespace symrange
