// Acceptance gate: one PASS/FAIL line per criterion.  Usage: acceptance <path-to-symrange-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>

#include "symrange/errors.hpp"
#include "symrange/families.hpp"
#include "symrange/harmonic.hpp"
#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/optrange.hpp"
#include "symrange/random.hpp"

using namespace symrange;

namespace {

// Tolerances and limits, fixed here.
constexpr double kExact = 1e-12;
constexpr double kClosedFormMatch = 1e-10;
constexpr double kFastAgreement = 1e-9;
constexpr double kWindowDoubling = 0.05;
constexpr double kMinSpeedup = 4.0;
constexpr double kUnboundedRatio = 10.0;
constexpr double kBandLo = 0.2, kBandHi = 5.0;
constexpr std::uint64_t kSeed = 1;

using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = clock_type::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  if (budget_seconds > 0.0 && secs >= budget_seconds) {
    o.ok = false;
    o.detail += "; over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Mixed family whose membership in the weak-l1 range is known by construction:
// finite supports are members; power-log tails are members iff alpha > 1 or
// (alpha == 1 and beta <= 1).
struct Labeled {
  Sequence x;
  bool member;
};

std::vector<Labeled> labeled_family(int count) {
  Rng rng(kSeed, "acceptance/membership");
  const std::vector<std::pair<double, double>> shapes = {
      {1.0, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {1.0, 1.5}, {1.0, 2.0}, {0.5, 0.0}, {0.75, 1.0},
      {0.9, 0.0}, {1.5, 0.0}, {1.5, 3.0}, {2.0, 1.0}, {3.0, 0.0}, {1.25, 2.0}};
  std::vector<Labeled> out;
  for (int i = 0; i < count; ++i) {
    if (i % 3 == 0) {
      std::vector<double> v(static_cast<std::size_t>(rng.uniform_int(1, 100)));
      for (double& e : v) e = rng.coin(0.1) ? 0.0 : rng.uniform(-3.0, 3.0);
      v.front() = 1.0;
      out.push_back({Sequence::finite(v), true});
      continue;
    }
    const auto [a, b] = shapes[static_cast<std::size_t>(rng.uniform_int(0, Index(shapes.size()) - 1))];
    PowerLog g{a, b, std::exp(rng.uniform(-2.0, 2.0))};
    std::vector<double> head;
    if (i % 3 == 2) {
      head.resize(static_cast<std::size_t>(rng.uniform_int(1, 6)));
      const double top = g.scale * power_log_sup(a, b, 0);
      for (double& e : head) e = top * std::exp(rng.uniform(0.0, 1.5));
    }
    out.push_back({Sequence::analytic(std::move(head), g), a > 1.0 || (a == 1.0 && b <= 1.0)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <symrange-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const Sequence harm = Sequence::power_log(1.0, 0.0);

  criterion(1, "harmonic Calderon values", 1.0, [&] {
    const auto s = calderon(harm, Index{1} << 16);
    const double e0 = std::fabs(s.at(0) - 2.0), e1 = std::fabs(s.at(1) - 1.25);
    return Outcome{e0 <= kExact && e1 <= kExact && s.max_halfwidth() <= kExact,
                   "|S(0)-2| = " + fmt(e0) + ", |S(1)-5/4| = " + fmt(e1)};
  });

  criterion(2, "harmonic asymptotic envelope", 10.0, [&] {
    bool ok = true;
    std::string d;
    for (Index n : {Index{100}, Index{1000}, Index{10000}, Index{1000000}}) {
      const double l = std::log(double(n) + 1.0);
      const double q = harmonic_calderon_closed_form(n) * (double(n) + 1.0) / l;
      ok = ok && q >= 1.0 && q <= 1.0 + 1.8 / l;
      d += "n=" + std::to_string(n) + " q=" + fmt(q) + " ";
    }
    const Index top = 100001;
    const auto s = calderon(harm, top);
    double err = 0.0;
    for (Index n = 0; n < top; ++n) err = std::max(err, std::fabs(s.at(n) - harmonic_calderon_closed_form(n)));
    // Independent oracle for the closed form itself: a running harmonic sum.
    double h = 0.0, err_oracle = 0.0;
    for (Index n = 0; n < top; ++n) {
      h += 1.0 / (double(n) + 1.0);
      err_oracle = std::max(err_oracle, std::fabs(harmonic_calderon_closed_form(n) - (h + 1.0) / (double(n) + 1.0)));
    }
    ok = ok && err <= kClosedFormMatch && err_oracle <= kClosedFormMatch;
    return Outcome{ok, d + "; prefix-sum vs closed form " + fmt(err) + ", closed form vs running sum " + fmt(err_oracle)};
  });

  criterion(3, "pointwise domination |S x| <= S mu(x)", 30.0, [&] {
    const auto fam = generate_family(FamilyKind::RandomSigned, 1000, kSeed);
    const Index w = 256;
    long violations = 0;
    for (const auto& x : fam) {
      const auto sx = calderon(x, w);
      const auto smu = calderon(decreasing_rearrangement(x), w);
      for (Index n = 0; n < w; ++n) {
        if (std::fabs(sx.at(n)) > smu.at(n) * (1.0 + kExact)) ++violations;
      }
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations over 1000 inputs, window 256"};
  });

  criterion(4, "Hilbert lower bound (1/2pi) S x(n) <= |H x(-n)|", 60.0, [&] {
    const auto fam = generate_family(FamilyKind::RandomNonnegDecreasing, 200, kSeed);
    long violations = 0;
    double min_ratio = INFINITY;
    for (const auto& x : fam) {
      const auto s = calderon(x, 513);
      const auto h = hilbert(x, -512, -1, EvalMethod::Naive);
      for (Index n = 1; n <= 512; ++n) {
        const double lhs = s.at(n) / (2.0 * std::numbers::pi), rhs = std::fabs(h.at(-n));
        if (lhs > rhs) ++violations;
        if (lhs > 0.0) min_ratio = std::min(min_ratio, rhs / lhs);
      }
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations; min |H x(-n)| / lhs = " + fmt(min_ratio)};
  });

  criterion(5, "weak-type (1,1) of H", 0.0, [&] {
    const auto h = hilbert(Sequence::unit(0, IndexDomain::Line), -(Index{1} << 12), Index{1} << 12, EvalMethod::Naive);
    const double spike = weak_l1_quasinorm(Sequence::finite(h.values, 0, IndexDomain::Line)).value;
    auto fam = generate_family(FamilyKind::RandomSigned, 100, kSeed ^ 0x77);
    for (auto& x : fam) x = scaled(x, 1.0 / lp_norm(x, 1.0).value);
    const auto rep = estimate_weak11_constant(fam, Index{1} << 12);
    const double c = rep.observed("weak11_constant");
    const double change = rep.observed("window_doubling_change");
    const bool ok = std::fabs(spike - 2.0 / std::numbers::pi) <= kExact && std::isfinite(c) && change <= kWindowDoubling;
    return Outcome{ok, "||H e0|| = " + fmt(spike) + " (2/pi = " + fmt(2.0 / std::numbers::pi) + "), family constant " +
                           fmt(c) + ", change " + fmt(change)};
  });

  criterion(6, "Hardy constants", 60.0, [&] {
    bool ok = true;
    std::string d;
    for (double p : {1.5, 2.0, 3.0}) {
      const auto fam = generate_family(FamilyKind::RandomSigned, 500, kSeed ^ std::uint64_t(p * 8));
      const double c = estimate_hardy_constant(p, fam).observed("hardy_constant");
      const double bound = p + p / (p - 1.0);
      ok = ok && c <= bound;
      d += "p=" + fmt(p) + ": " + fmt(c) + " <= " + fmt(bound) + "  ";
    }
    return Outcome{ok, d};
  });

  criterion(7, "fast Hilbert agreement and speedup", 0.0, [&] {
    const auto rows = bench_hilbert({Index{1} << 12, Index{1} << 16}, kSeed);
    const bool ok = rows[0].normwise_deviation <= kFastAgreement && rows[1].normwise_deviation <= kFastAgreement &&
                    rows[1].speedup() > kMinSpeedup;
    return Outcome{ok, "deviation at 2^12 " + fmt(rows[0].normwise_deviation) + ", speedup at 2^16 " +
                           fmt(rows[1].speedup()) + "x (naive " + fmt(rows[1].naive_seconds) + "s, fast " +
                           fmt(rows[1].fast_seconds) + "s)"};
  });

  criterion(8, "weak-l1 range membership biconditional", 0.0, [&] {
    const auto fam = labeled_family(500);
    const WitnessSearch search(SpaceSpec::weak_l1());
    int agree = 0, members = 0;
    for (const auto& [x, label] : fam) {
      const bool member = weak_l1_membership(x).member;
      bool found = true;
      try {
        (void)search.run(x);
      } catch (const NoWitnessFound&) {
        found = false;
      }
      members += label;
      agree += (member == found && member == label);
    }
    const double c_a = weak_l1_membership(harm).c_a;
    const double ce = std::fabs(c_a - 1.0 / std::log(2.0));
    return Outcome{agree == 500 && ce <= kExact, std::to_string(agree) + "/500 agree (" + std::to_string(members) +
                                                     " members), |c_a(harmonic) - 1/log 2| = " + fmt(ce)};
  });

  criterion(9, "quasi-triangle of the range quasi-norm", 0.0, [&] {
    const SpaceSpec weak = SpaceSpec::weak_l1();
    const double c_e = axiom_check(weak, 10000, kSeed).observed("quasi_triangle_modulus");
    const auto rep = verify_f_quasitriangle(weak, 200, kSeed, c_e);
    const auto& c = rep.find("f_quasi_triangle");
    return Outcome{c.status == Status::Pass, "c_E = " + fmt(c_e) + "; " + c.detail};
  });

  criterion(10, "minimality probe", 0.0, [&] {
    // Direct: ||S h||_{1,inf} on the window is sup_n (H_{n+1} + 1) = H_{2^16} + 1.
    const Index w = Index{1} << 16;
    const auto s = calderon(harm, w);
    double sup = 0.0;
    for (Index n = 0; n < w; ++n) sup = std::max(sup, (double(n) + 1.0) * s.at(n));
    const double ratio = sup / weak_l1_quasinorm(harm).value;
    const auto rep = verify_minimality(SpaceSpec::weak_l1(), {SpaceSpec::weak_l1(), SpaceSpec::marcinkiewicz()}, 40,
                                       kSeed, w);
    const auto& bw = rep.find("bounded_weak_l1");
    const auto& bm = rep.find("bounded_m1inf");
    const auto& cm = rep.find("containment_m1inf");
    const bool ok = ratio > kUnboundedRatio && bw.detail.rfind("unbounded", 0) == 0 &&
                    bm.detail.rfind("bounded", 0) == 0 && bm.observed_constant && std::isfinite(*bm.observed_constant) &&
                    cm.status == Status::Pass;
    return Outcome{ok, "harmonic ratio into weak-l1 " + fmt(ratio) + "; m1inf bound " +
                           fmt(bm.observed_constant.value_or(NAN)) + "; containment: " + cm.detail};
  });

  criterion(11, "dilation-commutation band", 0.0, [&] {
    const auto rep = verify_dilation_band(200, kSeed);
    const double c1 = rep.observed("dilation_band_lower"), c2 = rep.observed("dilation_band_upper");
    return Outcome{kBandLo <= c1 && c1 <= c2 && c2 <= kBandHi, "[c1, c2] = [" + fmt(c1) + ", " + fmt(c2) + "]"};
  });

  criterion(12, "determinism of verify --suite all", 300.0, [&] {
    const auto dir = std::filesystem::temp_directory_path() / ("symrange_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto run = [&](const std::string& name) {
      const std::string cmd = "\"" + cli + "\" verify --suite all --seed 1 --out \"" + (dir / name).string() +
                              "\" 2>/dev/null";
      return std::system(cmd.c_str());
    };
    const auto t0 = clock_type::now();
    const int rc1 = run("a.csv");
    const double first = std::chrono::duration<double>(clock_type::now() - t0).count();
    const int rc2 = run("b.csv");
    const std::string a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
    std::filesystem::remove_all(dir);
    const bool ok = !a.empty() && a == b && rc1 == 0 && rc2 == 0 && first <= 300.0;
    return Outcome{ok, std::string(a == b ? "byte-identical" : "reports differ") + " (" + std::to_string(a.size()) +
                           " bytes), exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) +
                           ", single run " + fmt(first) + "s"};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
