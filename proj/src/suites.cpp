#include "symrange/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symrange/errors.hpp"
#include "symrange/families.hpp"
#include "symrange/harmonic.hpp"
#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/optrange.hpp"
#include "symrange/random.hpp"
#include "symrange/tail.hpp"

namespace symrange {

namespace {

void check(VerificationReport& r, std::string name, bool ok, double observed, std::string detail,
           std::string witness = {}) {
  r.add({std::move(name), ok ? Status::Pass : Status::Fail, observed, std::move(detail),
         ok ? std::string() : std::move(witness)});
}

void prefixed_merge(VerificationReport& into, const VerificationReport& part) {
  for (auto c : part.cases) {
    c.name = part.suite + "/" + c.name;
    into.add(std::move(c));
  }
}

std::string tag(std::uint64_t seed, int t) { return "seed=" + std::to_string(seed) + " trial=" + std::to_string(t); }

std::vector<double> signed_values(Rng& rng, Index max_support) {
  auto v = random_magnitudes(rng, rng.uniform_int(1, max_support));
  for (double& e : v) e = rng.coin() ? e : -e;
  return v;
}

// ---------------------------------------------------------------- core

VerificationReport core_suite(const RunConfig& cfg) {
  VerificationReport r;
  r.suite = "core";
  const std::uint64_t seed = cfg.seed ^ fnv1a("core");

  {
    const auto mu = decreasing_rearrangement(Sequence::finite({3.0, -1.0, 2.0}));
    const std::vector<double> want = {3.0, 2.0, 1.0};
    check(r, "rearrange_example", std::vector<double>(mu.values().begin(), mu.values().end()) == want &&
                                      mu.has_finite_support(),
          0.0, "mu([3, -1, 2]) = [3, 2, 1, 0, ...]");
    check(r, "rearrange_zero", decreasing_rearrangement(Sequence::zero()).is_zero(), 0.0, "mu(0) = 0");
    const auto h = decreasing_rearrangement(Sequence::power_log(1.0, 0.0), cfg.window);
    bool same = h.tail() && *h.tail() == PowerLog{1.0, 0.0, 1.0};
    for (Index k = 0; k < cfg.window && same; ++k) same = h(k) == 1.0 / (static_cast<double>(k) + 1.0);
    check(r, "rearrange_harmonic", same, 0.0, "mu(1/(k+1)) is the sequence itself on the window and beyond");
  }

  {
    const auto d = dilation(Sequence::finite({2.0, 5.0}), 2);
    const auto d1 = dilation(Sequence::finite({2.0, 5.0}), 1);
    const auto d3 = dilation(Sequence::finite({1.0}), 3);
    check(r, "dilation_examples",
          d == Sequence::finite({2.0, 2.0, 5.0, 5.0}) && d1 == Sequence::finite({2.0, 5.0}) &&
              d3 == Sequence::finite({1.0, 1.0, 1.0}),
          0.0, "sigma_2([a, b]) = [a, a, b, b], sigma_1 = id, sigma_3([1]) = [1, 1, 1]");
    bool rejected = false;
    try {
      (void)dilation(Sequence::unit(0), 0);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    check(r, "dilation_rejects_zero", rejected, 0.0, "sigma_0 is rejected");
  }

  {
    const Sequence e0 = Sequence::unit(0);
    const bool cancel = add_scaled(e0, 1.0, e0, -1.0).is_zero();
    const bool merge = add_scaled(Sequence::finite({1.0}), 1.0, Sequence::finite({1.0}, 1), 1.0) ==
                       Sequence::finite({1.0, 1.0});
    const Sequence x = Sequence::finite({0.5, -2.0, 4.0}, 3);
    const bool ident = add_scaled(x, 1.0, Sequence::zero(), 0.0) == x;
    check(r, "add_scaled_examples", cancel && merge && ident, 0.0, "e0 - e0 = 0; [1,0] + [0,1] = [1,1]; x + 0 = x");
  }

  {
    const Sequence h = Sequence::power_log(1.0, 0.0);
    const Bracket t0 = tail_sum_over_k(h, 0);
    const Bracket t9 = tail_sum_over_k(h, 9);
    const bool encloses = t0.lo <= 1.0 && 1.0 <= t0.hi && t9.lo <= 0.1 && 0.1 <= t9.hi &&
                          std::max(t0.halfwidth(), t9.halfwidth()) <= TailOptions{}.tolerance;
    const double err = std::max(std::fabs(t0.mid() - 1.0), std::fabs(t9.mid() - 0.1));
    const bool e0 = tail_sum_over_k(Sequence::unit(0), 5).mid() == 0.0 && tail_sum_over_k(Sequence::unit(0), 0).mid() == 0.0;
    check(r, "tail_sum_examples", encloses && err <= cfg.tolerance_exact && e0, err,
          "sum_{k>n} 1/(k(k+1)) = 1/(n+1) at n = 0, 9; empty tail of e0");
  }

  const int n_pairs = cfg.trials_or(1000);
  const int n_tuples = cfg.trials_or(200);
  const int n_small = cfg.trials_or(200);
  {
    Rng rng(seed, "idempotence");
    int bad_idem = 0, bad_perm = 0, bad_hom = 0;
    std::string where;
    for (int t = 0; t < n_small; ++t) {
      auto v = signed_values(rng, 64);
      const auto mu = decreasing_rearrangement(std::span<const double>(v));
      const auto mu2 = decreasing_rearrangement(mu.as_sequence());
      if (!(mu2 == mu)) {
        ++bad_idem;
        where = tag(cfg.seed, t);
      }
      auto p = v;
      for (std::size_t i = p.size(); i > 1; --i) {
        std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform_int(0, static_cast<Index>(i) - 1))]);
      }
      if (!(decreasing_rearrangement(std::span<const double>(p)) == mu)) {
        ++bad_perm;
        where = tag(cfg.seed, t);
      }
      const double c = rng.uniform(-10.0, 10.0);
      auto cv = v;
      for (double& e : cv) e *= c;
      const auto mc = decreasing_rearrangement(std::span<const double>(cv));
      bool hom = mc.size() == mu.size();
      for (Index k = 0; hom && k < mu.size(); ++k) hom = mc(k) == std::fabs(c) * mu(k);
      if (!hom && c != 0.0) {
        ++bad_hom;
        where = tag(cfg.seed, t);
      }
    }
    check(r, "rearrangement_idempotence", bad_idem == 0, bad_idem, "mu(mu(x)) == mu(x) bitwise", where);
    check(r, "rearrangement_permutation_invariance", bad_perm == 0, bad_perm, "permuted inputs give identical mu",
          where);
    check(r, "rearrangement_homogeneity", bad_hom == 0, bad_hom, "mu(c x) == |c| mu(x) bitwise", where);
  }

  {
    Rng rng(seed, "dilation_composition");
    int bad = 0;
    for (int t = 0; t < n_small; ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 32));
      const Index m = rng.uniform_int(1, 5), k = rng.uniform_int(1, 5);
      if (!(dilation(dilation(x, k), m) == dilation(x, m * k))) ++bad;
    }
    check(r, "dilation_composition", bad == 0, bad, "sigma_m sigma_k = sigma_(mk)");
  }

  {
    Rng rng(seed, "subadditivity");
    Extremum worst;
    for (int t = 0; t < n_pairs; ++t) {
      const Sequence x1 = Sequence::finite(signed_values(rng, 64));
      const Sequence x2 = Sequence::finite(signed_values(rng, 64), rng.uniform_int(0, 32));
      const auto lhs = decreasing_rearrangement(add_scaled(x1, 1.0, x2, 1.0));
      const auto d1 = dilation(decreasing_rearrangement(x1).values(), 2);
      const auto d2 = dilation(decreasing_rearrangement(x2).values(), 2);
      const Index n_end = std::max<Index>({lhs.size(), static_cast<Index>(d1.size()), static_cast<Index>(d2.size())});
      for (Index n = 0; n < n_end; ++n) {
        const auto at = [](const std::vector<double>& v, Index i) {
          return i < static_cast<Index>(v.size()) ? v[static_cast<std::size_t>(i)] : 0.0;
        };
        const double rhs = at(d1, n) + at(d2, n);
        worst.update(lhs(n) - rhs * (1.0 + 4e-16), tag(cfg.seed, t));
      }
    }
    check(r, "dilated_two_term_subadditivity", worst.value <= 0.0, std::max(worst.value, 0.0),
          "mu(n, x1+x2) <= sigma_2 mu(x1)(n) + sigma_2 mu(x2)(n), " + std::to_string(n_pairs) + " pairs", worst.where);
  }

  {
    Rng rng(seed, "finite_k_convergence");
    Extremum worst;
    for (int t = 0; t < n_tuples; ++t) {
      const int kk = static_cast<int>(rng.uniform_int(1, 6));
      Sequence sum = Sequence::zero();
      std::vector<double> rhs;
      for (int k = 1; k <= kk; ++k) {
        const Sequence xk = Sequence::finite(signed_values(rng, 24), rng.uniform_int(0, 24));
        sum = add_scaled(sum, 1.0, xk, 1.0);
        const auto d = dilation(decreasing_rearrangement(xk).values(), Index{1} << k);
        if (rhs.size() < d.size()) rhs.resize(d.size(), 0.0);
        for (std::size_t i = 0; i < d.size(); ++i) rhs[i] += d[i];
      }
      const auto lhs = decreasing_rearrangement(sum);
      for (Index n = 0; n < lhs.size(); ++n) {
        const double b = n < static_cast<Index>(rhs.size()) ? rhs[static_cast<std::size_t>(n)] : 0.0;
        worst.update(lhs(n) - b * (1.0 + 1e-15), tag(cfg.seed, t));
      }
    }
    check(r, "finite_k_dilation_bound", worst.value <= 0.0, std::max(worst.value, 0.0),
          "mu(n, sum_k x_k) <= sum_k sigma_(2^k) mu(x_k)(n), K <= 6, " + std::to_string(n_tuples) + " tuples",
          worst.where);
  }
  return r;
}

// ---------------------------------------------------------------- norms

VerificationReport norms_suite(const RunConfig& cfg) {
  VerificationReport r;
  r.suite = "norms";
  const std::uint64_t seed = cfg.seed ^ fnv1a("norms");
  const double tol = cfg.tolerance_exact;
  const Index w = cfg.window;
  const Sequence e0 = Sequence::unit(0);
  const Sequence harm = Sequence::power_log(1.0, 0.0);
  const Sequence ones2 = Sequence::finite({1.0, 1.0});
  const auto close = [tol](double a, double b) { return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(b)); };

  {
    const double a = lp_norm(e0, 2.0).value, b = lp_norm(Sequence::finite({3.0, 4.0}), 2.0).value;
    const auto c = lp_norm(harm, 2.0, w);
    const double want = std::numbers::pi / std::sqrt(6.0);
    check(r, "lp_examples", a == 1.0 && close(b, 5.0) && close(c.value, want) && c.tail_halfwidth <= 1e-12,
          std::fabs(c.value - want), "||e0||_2 = 1, ||[3,4]||_2 = 5, ||1/(k+1)||_2 = pi/sqrt 6");
  }
  {
    const auto a = weak_l1_quasinorm(harm, w), b = weak_l1_quasinorm(e0);
    const auto c = weak_l1_quasinorm(Sequence::power_log(1.0, 1.0), w);
    check(r, "weak_l1_examples", a.value == 1.0 && b.value == 1.0 && !c.is_finite(), a.value,
          "||1/(n+1)|| = 1, ||e0|| = 1, ||log(n+2)/(n+1)|| = inf");
  }
  {
    const auto c = llog_norm(harm, w);
    const double want = std::numbers::pi * std::numbers::pi / 6.0;
    check(r, "llog_examples", llog_norm(e0).value == 1.0 && close(llog_norm(ones2).value, 1.5) && close(c.value, want),
          std::fabs(c.value - want), "||e0|| = 1, ||[1,1]|| = 1.5, ||1/(n+1)|| = pi^2/6");
  }
  {
    const double a = lorentz_phi_norm(e0, PowerPhi{1.0}).value;
    const double b = lorentz_phi_norm(e0, Log1pPhi{}).value;
    const double c = lorentz_phi_norm(ones2, PowerPhi{0.5}).value;
    check(r, "lorentz_examples", a == 1.0 && close(b, std::log(2.0)) && close(c, std::sqrt(2.0)),
          std::fabs(c - std::sqrt(2.0)), "phi(t)=t on e0 is 1, log1p on e0 is log 2, sqrt on [1,1] is sqrt 2");
  }
  {
    const double want = 1.0 / std::log(2.0);
    const double a = marcinkiewicz_norm(e0).value;
    const auto b = marcinkiewicz_norm(harm, w);
    check(r, "marcinkiewicz_examples",
          close(a, want) && close(b.value, want) && b.tail_halfwidth == 0.0 && marcinkiewicz_norm(Sequence::zero()).value == 0.0,
          std::fabs(b.value - want), "e0 and 1/(n+1) give 1/log 2, zero gives 0");
  }
  {
    const double a = sum_space_quasinorm(Sequence::finite({2.5, 2.5, 2.5})).value;
    const double b = sum_space_quasinorm(e0).value;
    const double c = sum_space_quasinorm(harm, w).value;
    check(r, "sum_space_examples", a <= 2.5 && b == 1.0 && c <= 1.0, c, "[c,c,c] <= c, e0 = 1, 1/(n+1) <= 1");
  }

  // Axioms per space; the weak-l1 modulus is reused downstream.
  const std::vector<SpaceSpec> spaces = {SpaceSpec::lp(1.0),          SpaceSpec::lp(2.0),
                                         SpaceSpec::lp(3.0),          SpaceSpec::weak_l1(),
                                         SpaceSpec::llog(),           SpaceSpec::lorentz(Log1pPhi{}),
                                         SpaceSpec::lorentz(PowerPhi{0.5}), SpaceSpec::marcinkiewicz(),
                                         SpaceSpec::sum_weak_l1_linf()};
  for (const auto& s : spaces) {
    const int trials = cfg.trials_or(s.kind == SpaceKind::WeakL1 ? 10000 : 2000);
    prefixed_merge(r, axiom_check(s, trials, seed ^ fnv1a(s.name())));
  }

  const int n = cfg.trials_or(1000);
  {
    Rng rng(seed, "inclusion");
    Extremum worst;
    for (int t = 0; t < n; ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 256));
      const double wk = weak_l1_quasinorm(x).value;
      if (wk > 0.0) worst.update(marcinkiewicz_norm(x).value / wk, tag(cfg.seed, t));
    }
    worst.update(marcinkiewicz_norm(harm, w).value / weak_l1_quasinorm(harm, w).value, "harmonic");
    const double bound = 1.0 / std::log(2.0) + 1e-9;
    check(r, "inclusion_constant", worst.value <= bound, worst.value,
          "sup ||x||_{m1inf}/||x||_{1,inf} against 1/log 2 (" + worst.where + ")", worst.where);
  }
  {
    // Plateau profiles: 1/(k+1) up to m_j ~ e^j, then 1/m_j until j m_j.
    double first = 0.0, last = 0.0, m_max = 0.0;
    for (int j = 2; j <= 10; ++j) {
      const Index m = static_cast<Index>(std::ceil(std::exp(static_cast<double>(j))));
      std::vector<double> v(static_cast<std::size_t>(j * m));
      for (Index k = 0; k < j * m; ++k) v[static_cast<std::size_t>(k)] = k < m ? 1.0 / (static_cast<double>(k) + 1.0) : 1.0 / static_cast<double>(m);
      const Rearrangement mu(std::move(v), std::nullopt);
      const double ratio = weak_l1_quasinorm(mu).value / marcinkiewicz_norm(mu).value;
      m_max = std::max(m_max, marcinkiewicz_norm(mu).value);
      if (j == 2) first = ratio;
      last = ratio;
    }
    // Partial sums stay below H_m + j - 1 against log(j m + 1), so the m1inf norm stays below 2.
    check(r, "inclusion_strictness", last >= 3.0 * first && m_max <= 2.0, last / first,
          "weak/m1inf ratio growth over plateau profiles with bounded m1inf norm (max " + std::to_string(m_max) + ")");
    const auto lw = weak_l1_quasinorm(Sequence::power_log(1.0, 1.0), w);
    const auto lm = marcinkiewicz_norm(Sequence::power_log(1.0, 1.0), w);
    r.add({"log_profile_norms", Status::Pass, std::nullopt,
           std::string("log(n+2)/(n+1): weak-l1 ") + (lw.is_finite() ? "finite" : "infinite") + ", m1inf " +
               (lm.is_finite() ? "finite" : "infinite") + " (partial sums grow like log^2/2)",
           ""});
  }
  {
    Rng rng(seed, "equivalences");
    int lorentz_l1 = 0;
    double lo = 1.0, hi = 0.0;
    for (int t = 0; t < n; ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 256));
      if (x.is_zero()) continue;
      if (lorentz_phi_norm(x, PowerPhi{1.0}).value != lp_norm(x, 1.0).value) ++lorentz_l1;
      const double q = lorentz_phi_norm(x, Log1pPhi{}).value / llog_norm(x).value;
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    check(r, "lorentz_identity_is_l1", lorentz_l1 == 0, lorentz_l1, "phi(t)=t equals the l1 norm bitwise");
    check(r, "llog_equivalence", lo >= std::log(2.0) - tol && hi <= 1.0 + tol, lo,
          "log1p-Lorentz / llog in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], expected within [log 2, 1]");
  }
  {
    Rng rng(seed, "rearrangement_invariance");
    int bad = 0;
    for (int t = 0; t < n; ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 64), rng.uniform_int(-8, 8), IndexDomain::Line);
      const auto mu = decreasing_rearrangement(x);
      for (const auto& s : spaces) {
        if (norm(x, s).value != norm(mu.as_sequence(), s).value) ++bad;
      }
    }
    check(r, "norms_depend_on_mu_only", bad == 0, bad, "norm(x) == norm(mu(x)) bitwise for every space");
  }
  return r;
}

// ---------------------------------------------------------------- operators

VerificationReport operators_suite(const RunConfig& cfg) {
  VerificationReport r;
  r.suite = "operators";
  const std::uint64_t seed = cfg.seed ^ fnv1a("operators");
  const double tol = cfg.tolerance_exact;
  const Sequence e0 = Sequence::unit(0);
  const Sequence harm = Sequence::power_log(1.0, 0.0);

  {
    const auto s = calderon(e0, 64);
    double err = 0.0;
    for (Index n = 0; n < 64; ++n) err = std::max(err, std::fabs(s.at(n) - 1.0 / (static_cast<double>(n) + 1.0)));
    const auto h = calderon(harm, cfg.window);
    const double e2 = std::max(std::fabs(h.at(0) - 2.0), std::fabs(h.at(1) - 1.25));
    const auto mk = calderon_min_kernel(harm, 4);
    const double e3 = std::fabs(mk.at(0) - 2.0);
    check(r, "calderon_examples", err <= tol && e2 <= tol && e3 <= tol, std::max({err, e2, e3}),
          "S e0 = 1/(n+1); S(1/(k+1)) = 2, 5/4 at n = 0, 1; min-kernel route agrees");
  }
  {
    double err = 0.0;
    for (auto m : {EvalMethod::Naive, EvalMethod::FastConvolution}) {
      const auto h = hilbert(Sequence::unit(0, IndexDomain::Line), -50, 50, m);
      const auto d = hilbert(Sequence::finite({1.0, -1.0}, 0, IndexDomain::Line), -50, 50, m);
      for (Index n = -50; n <= 50; ++n) {
        const double nd = static_cast<double>(n);
        const double want = n == 0 ? 0.0 : std::numbers::inv_pi / nd;
        err = std::max(err, std::fabs(h.at(n) - want));
        if (n != 0 && n != 1) {
          err = std::max(err, std::fabs(d.at(n) - std::numbers::inv_pi * (1.0 / nd - 1.0 / (nd - 1.0))));
        }
      }
    }
    check(r, "hilbert_examples", err <= tol, err, "H e0 = 1/(pi n); H(e0 - e1) = (1/n - 1/(n-1))/pi");
  }

  const int n_dom = cfg.trials_or(1000);
  {
    Index bad = 0;
    double worst = -1.0;
    std::string where;
    const auto fam = generate_family(FamilyKind::RandomSigned, n_dom, seed);
    const Index win = std::min<Index>(cfg.window, 256);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto rep = verify_pointwise_domination(fam[i], win, tol);
      worst = std::max(worst, rep.cases[0].observed_constant.value_or(0.0));
      if (!rep.passed()) {
        ++bad;
        where = "family index " + std::to_string(i);
      }
    }
    const auto alt = verify_pointwise_domination(Sequence::finite({1.0, -1.0, 1.0, -1.0}), 4, tol);
    const double sx0 = std::fabs(calderon(Sequence::finite({1.0, -1.0, 1.0, -1.0}), 1).at(0));
    const double smu0 = calderon(Sequence::finite({1.0, 1.0, 1.0, 1.0}), 1).at(0);
    check(r, "pointwise_domination", bad == 0 && alt.passed() && sx0 < smu0, worst,
          std::to_string(n_dom) + " random signed inputs, max |S x| - S mu(x) on window " + std::to_string(win) +
              "; alternating input strict at n=0",
          where);
  }
  {
    bool ok = verify_sd_rearrangement_fixed(e0, 256).passed() &&
              verify_sd_rearrangement_fixed(harm, cfg.window).passed();
    const auto fam = generate_family(FamilyKind::RandomNonnegDecreasing, cfg.trials_or(200), seed);
    int bad = 0;
    for (const auto& x : fam) bad += verify_sd_rearrangement_fixed(x, 512).passed() ? 0 : 1;
    check(r, "sd_rearrangement_fixed", ok && bad == 0, bad, "S mu(x) nonincreasing and rearrangement-fixed");
  }
  {
    std::vector<Sequence> fam = {e0, Sequence::finite({1.0, 1.0})};
    {
      std::vector<double> h(1024);
      for (std::size_t k = 0; k < h.size(); ++k) h[k] = 1.0 / (static_cast<double>(k) + 1.0);
      fam.push_back(Sequence::finite(std::move(h)));
    }
    for (auto& x : generate_family(FamilyKind::RandomNonnegDecreasing, cfg.trials_or(200), seed)) fam.push_back(x);
    int bad = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& x : fam) {
      const auto rep = verify_hilbert_lower_bound(x, 512);
      bad += rep.passed() ? 0 : 1;
      min_slack = std::min(min_slack, rep.cases[0].observed_constant.value_or(0.0));
    }
    check(r, "hilbert_lower_bound", bad == 0, min_slack,
          "(1/2pi) S x(n) <= |H x(-n)| for n in [1, 512] over " + std::to_string(fam.size()) + " inputs");
  }
  {
    const auto one = estimate_weak11_constant({Sequence::unit(0, IndexDomain::Line)});
    const double spike = one.observed("weak11_constant");
    check(r, "weak11_spike", std::fabs(spike - 2.0 * std::numbers::inv_pi) <= tol, spike, "||H e0||_{1,inf} = 2/pi");
    auto fam = generate_family(FamilyKind::RandomSigned, cfg.trials_or(100), seed ^ 0x5eed);
    for (auto& x : fam) {
      const double l1 = lp_norm(x, 1.0).value;
      if (l1 > 0.0) x = scaled(x, 1.0 / l1);
    }
    prefixed_merge(r, estimate_weak11_constant(fam));
  }
  for (double p : {1.5, 2.0, 3.0}) {
    auto fam = generate_family(FamilyKind::RandomSigned, cfg.trials_or(500), seed ^ fnv1a(std::to_string(p)));
    fam.push_back(Sequence::unit(0));
    auto rep = estimate_hardy_constant(p, fam);
    rep.suite = "hardy_p" + std::to_string(p).substr(0, 3);
    prefixed_merge(r, rep);
  }
  {
    const double e0_ratio = estimate_hardy_constant(2.0, {e0}).observed("hardy_constant");
    const double want = std::numbers::pi / std::sqrt(6.0);
    check(r, "hardy_spike", e0_ratio >= want - tol && e0_ratio <= 4.0, e0_ratio,
          "upper enclosure of ||S e0||_2 / ||e0||_2 contains pi/sqrt 6 and stays below 4");
  }
  prefixed_merge(r, verify_dilation_band(cfg.trials_or(200), seed));
  prefixed_merge(r, operator_property_check(cfg.trials_or(200), seed, tol));
  return r;
}

// ---------------------------------------------------------------- optrange

std::vector<Sequence> membership_family(std::uint64_t seed, int count) {
  Rng rng(seed, "membership");
  std::vector<Sequence> out;
  const std::vector<PowerLog> grid = [] {
    std::vector<PowerLog> g = power_log_grid();
    g.push_back({1.0, 1.0, 1.0});
    g.push_back({1.0, 1.5, 1.0});
    g.push_back({1.25, 3.0, 1.0});
    return g;
  }();
  for (int i = 0; i < count; ++i) {
    const int kind = i % 3;
    if (kind == 0) {
      out.push_back(Sequence::finite(signed_values(rng, 128)));
      continue;
    }
    PowerLog g = grid[static_cast<std::size_t>(rng.uniform_int(0, static_cast<Index>(grid.size()) - 1))];
    g.scale = std::exp(rng.uniform(-3.0, 3.0));
    std::vector<double> head;
    if (kind == 2) {
      head.resize(static_cast<std::size_t>(rng.uniform_int(1, 8)));
      const double top = g.scale * power_log_sup(g.alpha, g.beta, 0);
      for (double& e : head) e = top * std::exp(rng.uniform(0.0, 2.0));
    }
    out.push_back(Sequence::analytic(std::move(head), g));
  }
  return out;
}

VerificationReport optrange_suite(const RunConfig& cfg) {
  VerificationReport r;
  r.suite = "optrange";
  const std::uint64_t seed = cfg.seed ^ fnv1a("optrange");
  const double tol = cfg.tolerance_exact;
  const SpaceSpec weak = SpaceSpec::weak_l1();
  const WitnessSearch search(weak);
  const Sequence e0 = Sequence::unit(0);
  const Sequence harm = Sequence::power_log(1.0, 0.0);

  {
    const auto y = Sequence::finite({0.5, 0.25, 0.25});
    const auto sy = calderon(decreasing_rearrangement(y), 32);
    const bool self = check_domination(Sequence::finite(sy.values), y, 32).verified();
    const bool unit = check_domination(e0, e0).verified();
    const auto twice = check_domination(scaled(e0, 2.0), e0);
    check(r, "domination_examples", self && unit && !twice.verified() && twice.first_violation == 0, 0.0,
          "x = S mu(y) verifies; e0 under e0 verifies; 2 e0 under e0 fails at n = 0");
  }
  {
    const auto a = search.run(e0);
    const auto z = search.run(Sequence::zero());
    const Sequence x = Sequence::finite({0.3, -1.7, 0.2, 0.9});
    const auto b = search.run(x);
    const auto b4 = search.run(scaled(x, 4.0));
    check(r, "fnorm_examples", a.upper <= 1.0 && z.upper == 0.0 && b4.upper == 4.0 * b.upper, a.upper,
          "||e0||_F <= 1, ||0||_F = 0, ||4 x||_F = 4 ||x||_F");
  }
  {
    const auto a = weak_l1_membership(Sequence::power_log(1.0, 1.0), cfg.window);
    const auto b = weak_l1_membership(harm, cfg.window);
    const auto c = weak_l1_membership(Sequence::power_log(1.0, 2.0), cfg.window);
    const double want = 1.0 / std::log(2.0);
    check(r, "membership_examples", a.member && std::fabs(a.c_a - 1.0) <= tol && b.member &&
                                        std::fabs(b.c_a - want) <= tol && !c.member,
          b.c_a, "c_a = 1 for log(n+2)/(n+1), 1/log 2 for 1/(n+1), infinite for log(n+2)^2/(n+1)");
  }
  {
    Rng rng(seed, "membership_scaling");
    double worst = 0.0;
    for (int t = 0; t < cfg.trials_or(200); ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 64));
      const double c = std::exp(rng.uniform(-4.0, 4.0));
      const double a = weak_l1_membership(x).c_a, b = weak_l1_membership(scaled(x, c)).c_a;
      if (a > 0.0) worst = std::max(worst, std::fabs(b - c * a) / (c * a));
    }
    check(r, "membership_scaling", worst <= tol, worst, "c_a(c x) = c c_a(x)");
  }
  {
    const double v0 = harmonic_calderon_closed_form(0), v1 = harmonic_calderon_closed_form(1);
    double env = 0.0;
    bool inside = true;
    for (Index n : {Index{100}, Index{1000}, Index{10000}, Index{1000000}}) {
      const double nd = static_cast<double>(n);
      const double q = harmonic_calderon_closed_form(n) * (nd + 1.0) / std::log(nd + 1.0);
      inside = inside && q >= 1.0 && q <= 1.0 + 1.8 / std::log(nd + 1.0);
      env = std::max(env, (q - 1.0) * std::log(nd + 1.0));
    }
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (Index n = 10; n <= 1000000; ++n) {
      const double nd = static_cast<double>(n);
      const double q = harmonic_calderon_closed_form(n) * (nd + 1.0) / std::log(nd + 1.0);
      if (q > prev) monotone = false;
      if (q > 1.0 + 1.8 / std::log(nd + 1.0) || q < 1.0) inside = false;
      prev = q;
    }
    check(r, "closed_form_values", std::fabs(v0 - 2.0) <= tol && std::fabs(v1 - 1.25) <= tol, std::fabs(v0 - 2.0),
          "(H_1 + 1)/1 = 2, (H_2 + 1)/2 = 5/4");
    check(r, "closed_form_envelope", inside && monotone, env,
          "ratio (n+1) S(n)/log(n+1) in [1, 1 + 1.8/log(n+1)] and nonincreasing for n in [10, 1e6]; max (ratio-1) log(n+1)");
  }
  {
    const Index top = std::min<Index>(100000, cfg.window) + 1;
    const auto s = calderon(harm, top);
    double err = 0.0;
    for (Index n = 0; n < top; ++n) err = std::max(err, std::fabs(s.at(n) - harmonic_calderon_closed_form(n)));
    check(r, "closed_form_matches_calderon", err <= 1e-10, err,
          "prefix-sum route against (H_{n+1}+1)/(n+1) for n < " + std::to_string(top));
  }
  {
    const auto fam = membership_family(seed, cfg.trials_or(500));
    int agree = 0, members = 0;
    std::string where;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const bool member = weak_l1_membership(fam[i], search.grid().window).member;
      bool found = true;
      try {
        (void)search.run(fam[i]);
      } catch (const NoWitnessFound&) {
        found = false;
      }
      members += member ? 1 : 0;
      if (member == found) {
        ++agree;
      } else {
        where = "family index " + std::to_string(i);
      }
    }
    check(r, "membership_biconditional", agree == static_cast<int>(fam.size()), agree,
          std::to_string(agree) + "/" + std::to_string(fam.size()) + " agree (" + std::to_string(members) +
              " members)",
          where);
  }
  {
    Rng rng(seed, "certificates");
    int unsound = 0, variant = 0, nonmono = 0;
    const WitnessSearch fine(weak, GridConfig::named("fine"));
    for (int t = 0; t < cfg.trials_or(100); ++t) {
      const Sequence x = Sequence::finite(signed_values(rng, 64), rng.uniform_int(0, 16));
      const auto est = search.run(x);
      if (!check_domination(x, est.witness.y, est.witness.window).verified()) ++unsound;
      const auto mu_est = search.run(decreasing_rearrangement(x).as_sequence());
      if (mu_est.upper != est.upper) ++variant;
      if (fine.run(x).upper > est.upper) ++nonmono;
    }
    check(r, "certificate_soundness", unsound == 0, unsound, "every witness re-verifies from scratch");
    check(r, "f_rearrangement_invariance", variant == 0, variant, "search on x and on mu(x) agree bitwise");
    check(r, "grid_monotonicity", nonmono == 0, nonmono, "a finer grid never gives a larger estimate");
  }
  {
    const auto ax = axiom_check(weak, cfg.trials_or(2000), seed);
    const double c_e = ax.observed("quasi_triangle_modulus");
    prefixed_merge(r, verify_f_quasitriangle(weak, cfg.trials_or(200), seed, c_e));
  }
  prefixed_merge(r, verify_minimality(weak, minimality_catalog(), cfg.trials_or(40), seed, cfg.window));
  prefixed_merge(r, verify_minimality(SpaceSpec::lp(2.0), minimality_catalog(), cfg.trials_or(20), seed, cfg.window));
  prefixed_merge(r, verify_hilbert_optimal_range(cfg.trials_or(50), seed));
  return r;
}

}  // namespace

void RunConfig::validate() const {
  if (window < 16) throw std::invalid_argument("window must be >= 16");
  if (!(tolerance_exact > 0.0) || !(tolerance_fast > 0.0)) throw std::invalid_argument("tolerances must be > 0");
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core", "norms", "operators", "optrange", "all"};
  return names;
}

VerificationReport run_suite(const std::string& name, const RunConfig& config) {
  config.validate();
  VerificationReport r;
  r.suite = name;
  r.environment["seed"] = config.seed;
  r.environment["window"] = config.window;
  r.environment["trials"] = config.trials;
  r.environment["tolerance_exact"] = config.tolerance_exact;
  r.environment["tolerance_fast"] = config.tolerance_fast;
  const auto run = [&](const std::string& s) {
    if (s == "core") return core_suite(config);
    if (s == "norms") return norms_suite(config);
    if (s == "operators") return operators_suite(config);
    return optrange_suite(config);
  };
  if (name == "all") {
    for (const char* s : {"core", "norms", "operators", "optrange"}) prefixed_merge(r, run(s));
  } else if (name == "core" || name == "norms" || name == "operators" || name == "optrange") {
    prefixed_merge(r, run(name));
  } else {
    throw std::invalid_argument("unknown suite '" + name + "' (expected core, norms, operators, optrange or all)");
  }
  return r;
}

}  // namespace symrange
