#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "symrange/errors.hpp"
#include "symrange/families.hpp"
#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/random.hpp"

namespace symrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CaseResult verdict(std::string name, bool ok, double observed, std::string detail, std::string witness = {}) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, observed, std::move(detail),
          ok ? std::string() : std::move(witness)};
}

std::vector<double> window_of(const OperatorOutput& o) { return o.values; }

double weak_norm_of_values(const std::vector<double>& v) {
  return weak_l1_quasinorm(decreasing_rearrangement(std::span<const double>(v))).value;
}

OperatorOutput hilbert_exact(const Sequence& x, Index lo, Index hi) {
  const Index support = x.is_finite() ? static_cast<Index>(x.finite_body().values.size()) : Index{1} << 16;
  const bool small = support * (hi - lo + 1) <= (Index{1} << 25);
  return hilbert(x, lo, hi, small ? EvalMethod::Naive : EvalMethod::FastConvolution);
}

void require_nonneg_nonincreasing(const Sequence& x) {
  if (x.domain() != IndexDomain::HalfLine) throw DomainError("input must live on Z_+");
  Index check_end = x.explicit_end();
  if (x.is_analytic()) {
    const auto& a = x.analytic_body();
    if (a.tail.scale < 0.0) throw DomainError("input must be nonnegative");
    check_end = std::max(check_end, a.tail.monotone_from()) + 1;
  }
  double prev = kInf;
  for (Index k = 0; k < check_end; ++k) {
    const double v = x(k);
    if (v < 0.0 || v > prev) {
      throw DomainError("input must be nonnegative and nonincreasing (index " + std::to_string(k) + ")");
    }
    prev = v;
  }
}

}  // namespace

VerificationReport verify_pointwise_domination(const Sequence& x, Index window, double tolerance) {
  VerificationReport r;
  r.suite = "pointwise_domination";
  const auto sx = calderon(x, window);
  const auto smu = calderon(decreasing_rearrangement(x, window), window);
  double worst = -kInf;
  Index first_bad = -1;
  Index violations = 0;
  for (Index n = 0; n < window; ++n) {
    const double lhs = std::fabs(sx.at(n));
    const double rhs = smu.at(n);
    const double slack = sx.halfwidth_at(n) + smu.halfwidth_at(n) + tolerance * std::max(rhs, 1e-300);
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + slack) {
      ++violations;
      if (first_bad < 0) first_bad = n;
    }
  }
  r.add(verdict("pointwise_domination", violations == 0, worst,
                "violations=" + std::to_string(violations) + " window=" + std::to_string(window),
                "first violation at n=" + std::to_string(first_bad)));
  return r;
}

VerificationReport verify_sd_rearrangement_fixed(const Sequence& x, Index window) {
  VerificationReport r;
  r.suite = "sd_rearrangement_fixed";
  const auto s = calderon(decreasing_rearrangement(x, window), window);
  Index increases = 0;
  Index first_bad = -1;
  for (Index n = 0; n + 1 < window; ++n) {
    if (s.at(n + 1) > s.at(n)) {
      ++increases;
      if (first_bad < 0) first_bad = n;
    }
  }
  const auto v = window_of(s);
  const bool fixed = decreasing_rearrangement(std::span<const double>(v)).window(window) == v;
  r.add(verdict("nonincreasing", increases == 0, static_cast<double>(increases),
                "increasing steps on the window", "first increase at n=" + std::to_string(first_bad)));
  r.add(verdict("rearrangement_fixed", fixed, fixed ? 0.0 : 1.0, "mu(S mu(x)) == S mu(x) bitwise on the window"));
  return r;
}

VerificationReport verify_hilbert_lower_bound(const Sequence& x, Index window) {
  require_nonneg_nonincreasing(x);
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  VerificationReport r;
  r.suite = "hilbert_lower_bound";
  const auto s = calderon(x, window + 1);
  const auto h = hilbert_exact(x, -window, -1);
  double min_slack = kInf;
  double min_ratio = kInf;
  Index violations = 0;
  Index first_bad = -1;
  for (Index n = 1; n <= window; ++n) {
    const double lhs = s.at(n) / (2.0 * std::numbers::pi);
    const double rhs = std::fabs(h.at(-n));
    const double slack = rhs - lhs;
    min_slack = std::min(min_slack, slack);
    if (lhs > 0.0) min_ratio = std::min(min_ratio, rhs / lhs);
    const double allowance = h.halfwidth_at(-n) + s.halfwidth_at(n) + 1e-12 * lhs;
    if (slack < -allowance) {
      ++violations;
      if (first_bad < 0) first_bad = n;
    }
  }
  r.add(verdict("hilbert_lower_bound", violations == 0, min_slack,
                "min |H x(-n)| - S x(n)/(2 pi); min ratio " + std::to_string(min_ratio) +
                    "; violations=" + std::to_string(violations),
                "first violation at n=" + std::to_string(first_bad)));
  return r;
}

VerificationReport estimate_weak11_constant(const std::vector<Sequence>& family, Index output_window) {
  if (output_window < 1) throw std::invalid_argument("output window must be >= 1");
  VerificationReport r;
  r.suite = "weak11_constant";
  double sup[2] = {0.0, 0.0};
  std::string where[2];
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Sequence& x = family[i];
    if (!x.is_finite()) throw DomainError("weak-type estimate needs finite-support inputs");
    const double l1 = lp_norm(x, 1.0).value;
    if (l1 == 0.0) continue;
    for (int w = 0; w < 2; ++w) {
      const Index half = output_window << w;
      const auto h = hilbert_exact(x, -half, half);
      const double ratio = weak_norm_of_values(h.values) / l1;
      if (ratio > sup[w]) {
        sup[w] = ratio;
        where[w] = "family index " + std::to_string(i);
      }
    }
  }
  const double change = sup[0] > 0.0 ? std::fabs(sup[1] - sup[0]) / sup[0] : 0.0;
  r.environment["output_window"] = output_window;
  r.add(verdict("weak11_constant", std::isfinite(sup[1]), sup[1],
                "sup ||H x||_{1,inf}/||x||_1 on [-2W, 2W] (" + where[1] + "); on [-W, W]: " +
                    std::to_string(sup[0])));
  r.add(verdict("window_doubling_change", change <= 0.05, change, "relative change of the constant from W to 2W"));
  return r;
}

VerificationReport estimate_hardy_constant(double p, const std::vector<Sequence>& family) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("Hardy estimate needs 1 < p < inf");
  VerificationReport r;
  r.suite = "hardy_constant";
  const double bound = p + p / (p - 1.0);
  double sup = 0.0;
  std::string where;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Sequence& x = family[i];
    if (!x.is_finite() || x.domain() != IndexDomain::HalfLine) {
      throw DomainError("Hardy estimate needs finite-support inputs on Z_+");
    }
    if (x.is_zero()) continue;
    const Index e = std::max<Index>(x.explicit_end(), 1);
    const auto s = calderon(x, e);
    double acc = 0.0;
    for (Index n = e - 1; n >= 0; --n) acc += std::pow(std::fabs(s.at(n)), p);
    double total = 0.0;
    for (double v : x.finite_body().values) total += v;
    // Past the support, (S x)(n) = total/(n+1).
    const Bracket tail = power_log_series_tail(p, 0.0, e).scaled(std::pow(std::fabs(total), p));
    const double upper = std::pow(acc + tail.hi, 1.0 / p) / lp_norm(x, p).value;
    if (upper > sup) {
      sup = upper;
      where = "family index " + std::to_string(i);
    }
  }
  r.environment["p"] = p;
  r.add(verdict("hardy_constant", sup <= bound, sup,
                "sup ||S x||_p/||x||_p (upper enclosure); bound " + std::to_string(bound), where));
  return r;
}

VerificationReport verify_dilation_band(int trials, std::uint64_t seed, const std::vector<Index>& factors) {
  VerificationReport r;
  r.suite = "dilation_band";
  Rng rng(seed, "operators/dilation_band");
  std::vector<std::vector<double>> inputs = {{1.0}, {1.0, 1.0}};
  for (int t = 0; t < trials; ++t) {
    auto v = random_magnitudes(rng, rng.uniform_int(1, 32));
    if (std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; })) v.front() = 1.0;
    inputs.push_back(std::move(v));
  }
  double lo = kInf, hi = 0.0;
  std::string lo_where, hi_where;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto mu = decreasing_rearrangement(std::span<const double>(inputs[i]));
    const auto z = std::vector<double>(mu.values().begin(), mu.values().end());
    const Index s = static_cast<Index>(z.size());
    const auto sz = calderon(Sequence::finite(z), 4 * s);
    for (Index m : factors) {
      const Index w = 4 * s * m;
      const auto lhs = calderon(Sequence::finite(dilation(std::span<const double>(z), m)), w);
      for (Index n = 0; n < w; ++n) {
        const double ratio = lhs.at(n) / sz.at(n / m);
        const auto tag = [&] {
          return "input " + std::to_string(i) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        };
        if (ratio < lo) {
          lo = ratio;
          lo_where = tag();
        }
        if (ratio > hi) {
          hi = ratio;
          hi_where = tag();
        }
      }
    }
  }
  r.environment["trials"] = trials;
  r.environment["seed"] = seed;
  r.add(verdict("dilation_band_lower", lo >= 0.2 && lo <= hi, lo,
                "min (S sigma_m mu(y))(n)/(sigma_m S mu(y))(n) at " + lo_where, lo_where));
  r.add(verdict("dilation_band_upper", hi <= 5.0 && lo <= hi, hi,
                "max (S sigma_m mu(y))(n)/(sigma_m S mu(y))(n) at " + hi_where, hi_where));
  return r;
}

VerificationReport operator_property_check(int trials, std::uint64_t seed, double tolerance) {
  VerificationReport r;
  r.suite = "operator_properties";
  constexpr Index kWindow = 128;
  const auto tag = [seed](int t) { return "seed=" + std::to_string(seed) + " trial=" + std::to_string(t); };

  {
    Rng rng(seed, "operators/linearity");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      auto xv = random_magnitudes(rng, rng.uniform_int(1, 64));
      auto yv = random_magnitudes(rng, rng.uniform_int(1, 64));
      for (double& e : xv) e = rng.coin() ? e : -e;
      for (double& e : yv) e = rng.coin() ? e : -e;
      const Sequence x = Sequence::finite(xv);
      const Sequence y = Sequence::finite(yv, rng.uniform_int(0, 32));
      const double a = rng.uniform(-3.0, 3.0), b = rng.uniform(-3.0, 3.0);
      const auto sxy = calderon(add_scaled(x, a, y, b), kWindow);
      const auto sx = calderon(x, kWindow), sy = calderon(y, kWindow);
      double scale = 0.0, err = 0.0;
      for (Index n = 0; n < kWindow; ++n) {
        scale = std::max(scale, std::fabs(a * sx.at(n)) + std::fabs(b * sy.at(n)));
        err = std::max(err, std::fabs(sxy.at(n) - (a * sx.at(n) + b * sy.at(n))));
      }
      worst.update(scale > 0.0 ? err / scale : err, tag(t));
    }
    r.add(verdict("linearity", worst.value <= tolerance, std::max(worst.value, 0.0),
                  "max |S(ax+by) - aSx - bSy| relative to max(|a Sx| + |b Sy|)", worst.where));
  }

  {
    Rng rng(seed, "operators/positivity");
    Index negatives = 0, increases = 0;
    std::string where;
    for (int t = 0; t < trials; ++t) {
      auto v = random_magnitudes(rng, rng.uniform_int(1, 64));
      const auto s = calderon(Sequence::finite(v), kWindow);
      for (Index n = 0; n < kWindow; ++n) {
        if (s.at(n) < 0.0) {
          ++negatives;
          where = tag(t);
        }
      }
      std::sort(v.begin(), v.end(), std::greater<>());
      const auto sd = calderon(Sequence::finite(v), kWindow);
      for (Index n = 0; n + 1 < kWindow; ++n) {
        if (sd.at(n + 1) > sd.at(n) * (1.0 + tolerance)) {
          ++increases;
          where = tag(t);
        }
      }
    }
    r.add(verdict("positivity", negatives == 0 && increases == 0, static_cast<double>(negatives + increases),
                  "negative values of S x for x >= 0 plus increases of S x for nonincreasing x", where));
  }

  {
    Index bad = 0;
    for (Index n = 0; n < 64; ++n) {
      for (Index k = 1; k < 512; ++k) {
        if (calderon_kernel(n, k + 1) > calderon_kernel(n, k)) ++bad;
      }
    }
    r.add(verdict("kernel_monotonicity", bad == 0, static_cast<double>(bad),
                  "increasing steps of k -> min{1, k/(n+1)}/k for n < 64, k < 512"));
  }

  {
    Rng rng(seed, "operators/min_kernel");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      auto v = random_magnitudes(rng, rng.uniform_int(1, 64));
      for (double& e : v) e = rng.coin() ? e : -e;
      const Sequence x = Sequence::finite(v, rng.uniform_int(0, 16));
      const auto a = calderon(x, 64);
      const auto b = calderon_min_kernel(x, 64);
      double err = 0.0;
      for (Index n = 0; n < 64; ++n) err = std::max(err, std::fabs(a.at(n) - b.at(n)));
      worst.update(err, tag(t));
    }
    r.add(verdict("min_kernel_agreement", worst.value <= tolerance, std::max(worst.value, 0.0),
                  "max |prefix-sum route - min-kernel route| on window 64", worst.where));
  }

  {
    Rng rng(seed, "operators/even_cancellation");
    Extremum worst;
    for (int t = 0; t < trials; ++t) {
      const Index half = rng.uniform_int(0, 64);
      auto side = random_magnitudes(rng, half + 1);
      for (double& e : side) e = rng.coin() ? e : -e;
      std::vector<double> v(static_cast<std::size_t>(2 * half + 1));
      for (Index k = 0; k <= half; ++k) {
        v[static_cast<std::size_t>(half + k)] = side[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(half - k)] = side[static_cast<std::size_t>(k)];
      }
      double mass = 0.0;
      for (double e : v) mass += std::fabs(e);
      if (mass == 0.0) continue;
      const Sequence x = Sequence::finite(v, -half, IndexDomain::Line);
      for (auto method : {EvalMethod::Naive, EvalMethod::FastConvolution}) {
        worst.update(std::fabs(hilbert(x, 0, 0, method).at(0)) / mass, tag(t) + " method=" + to_string(method));
      }
    }
    r.add(verdict("hilbert_even_cancellation", worst.value <= tolerance, std::max(worst.value, 0.0),
                  "max |(H x)(0)| / ||x||_1 over even x", worst.where));
  }

  {
    Rng rng(seed, "operators/fast_agreement");
    std::vector<double> v(4096);
    for (double& e : v) e = rng.uniform(-1.0, 1.0);
    const Sequence x = Sequence::finite(v, 0, IndexDomain::Line);
    const auto naive = hilbert(x, -2048, 6143, EvalMethod::Naive);
    const auto fast = hilbert(x, -2048, 6143, EvalMethod::FastConvolution);
    const double dev = normwise_deviation(fast, naive);
    r.add(verdict("hilbert_fast_agreement", dev <= 1e-9, dev,
                  "normwise relative deviation at support 4096; pointwise (|value| > 1e-12): " +
                      std::to_string(pointwise_deviation(fast, naive))));
  }
  return r;
}

std::vector<BenchRow> bench_hilbert(const std::vector<Index>& sizes, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (Index size : sizes) {
    if (size < 1) throw std::invalid_argument("bench sizes must be positive");
    Rng rng(seed ^ static_cast<std::uint64_t>(size), "bench/hilbert");
    std::vector<double> v(static_cast<std::size_t>(size));
    for (double& e : v) e = rng.uniform(-1.0, 1.0);
    v.front() = 1.0;
    v.back() = -1.0;
    const Sequence x = Sequence::finite(v, 0, IndexDomain::Line);

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto naive = hilbert(x, 0, size - 1, EvalMethod::Naive);
    const auto t1 = clock::now();
    const auto fast = hilbert(x, 0, size - 1, EvalMethod::FastConvolution);
    const auto t2 = clock::now();
    BenchRow row;
    row.size = size;
    row.naive_seconds = std::chrono::duration<double>(t1 - t0).count();
    row.fast_seconds = std::chrono::duration<double>(t2 - t1).count();
    row.normwise_deviation = normwise_deviation(fast, naive);
    row.pointwise_deviation = pointwise_deviation(fast, naive);
    rows.push_back(row);
  }
  return rows;
}

VerificationReport bench_report(const std::vector<BenchRow>& rows, double agreement_tol) {
  VerificationReport r;
  r.suite = "bench_hilbert";
  for (const auto& row : rows) {
    const std::string sz = std::to_string(row.size);
    r.add(verdict("agreement_" + sz, row.normwise_deviation <= agreement_tol, row.normwise_deviation,
                  "normwise relative deviation; pointwise " + std::to_string(row.pointwise_deviation)));
    r.add({"speedup_" + sz, Status::Pass, row.speedup(),
           "naive " + std::to_string(row.naive_seconds) + " s, fast " + std::to_string(row.fast_seconds) + " s", ""});
  }
  if (rows.size() >= 2) {
    const bool grows = rows.back().speedup() > rows.front().speedup();
    r.add(verdict("speedup_grows", grows, rows.back().speedup() / std::max(rows.front().speedup(), 1e-300),
                  "speedup at the largest size over speedup at the smallest"));
  }
  return r;
}

}  // namespace symrange
