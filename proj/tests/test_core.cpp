#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symrange/errors.hpp"
#include "symrange/harmonic.hpp"
#include "symrange/random.hpp"
#include "symrange/rearrangement.hpp"
#include "symrange/sequence.hpp"
#include "symrange/tail.hpp"

using namespace symrange;

namespace {

// Independent rearrangement: sort |x| descending, drop trailing zeros.
std::vector<double> sorted_abs(std::vector<double> v) {
  for (double& e : v) e = std::fabs(e);
  std::sort(v.begin(), v.end(), std::greater<>());
  while (!v.empty() && v.back() == 0.0) v.pop_back();
  return v;
}

std::vector<double> random_signed(Rng& rng, int max_len) {
  std::vector<double> v(static_cast<std::size_t>(rng.uniform_int(1, max_len)));
  for (double& e : v) e = rng.coin(0.15) ? 0.0 : rng.uniform(-5.0, 5.0);
  return v;
}

}  // namespace

TEST(Sequence, FiniteRejectsNonFinite) {
  EXPECT_THROW(Sequence::finite({1.0, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(Sequence::finite({INFINITY}), std::invalid_argument);
}

TEST(Sequence, HalfLineRejectsNegativeOffset) {
  EXPECT_THROW(Sequence::finite({1.0}, -1), std::invalid_argument);
  EXPECT_NO_THROW(Sequence::finite({1.0}, -1, IndexDomain::Line));
}

TEST(Sequence, PowerLogValidation) {
  EXPECT_THROW(Sequence::power_log(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Sequence::power_log(1.0, -1.0), std::invalid_argument);
  EXPECT_DOUBLE_EQ(Sequence::power_log(1.0, 0.0)(3), 0.25);
  EXPECT_DOUBLE_EQ(Sequence::power_log(2.0, 1.0)(0), std::log(2.0));
}

TEST(Sequence, ValueLookup) {
  const auto x = Sequence::finite({1.0, 2.0, 3.0}, 2);
  EXPECT_EQ(x(0), 0.0);
  EXPECT_EQ(x(2), 1.0);
  EXPECT_EQ(x(4), 3.0);
  EXPECT_EQ(x(5), 0.0);
}

TEST(Rearrangement, BasicExample) {
  const auto mu = decreasing_rearrangement(Sequence::finite({3.0, -1.0, 2.0}));
  ASSERT_EQ(mu.size(), 3);
  EXPECT_EQ(mu(0), 3.0);
  EXPECT_EQ(mu(1), 2.0);
  EXPECT_EQ(mu(2), 1.0);
  EXPECT_EQ(mu(3), 0.0);
  EXPECT_TRUE(decreasing_rearrangement(Sequence::zero()).is_zero());
}

TEST(Rearrangement, MatchesSortOracle) {
  Rng rng(11, "rearrangement_oracle");
  for (int t = 0; t < 300; ++t) {
    auto v = random_signed(rng, 80);
    const auto mu = decreasing_rearrangement(Sequence::finite(v, rng.uniform_int(-5, 5), IndexDomain::Line));
    const auto want = sorted_abs(v);
    ASSERT_EQ(std::vector<double>(mu.values().begin(), mu.values().end()), want) << "trial " << t;
  }
}

TEST(Rearrangement, HarmonicIsFixed) {
  const auto mu = decreasing_rearrangement(Sequence::power_log(1.0, 0.0), 1 << 12);
  for (Index k : {0, 1, 7, 4095, 4096, 100000}) EXPECT_DOUBLE_EQ(mu(k), 1.0 / (double(k) + 1.0));
}

TEST(Rearrangement, AnalyticWithBumpIsSorted) {
  // log(k+2)^2/(k+1) rises before it falls; mu must sort the rising part.
  const auto x = Sequence::power_log(1.0, 2.0);
  const auto mu = decreasing_rearrangement(x, 1 << 12);
  auto w = mu.window(2000);
  EXPECT_TRUE(std::is_sorted(w.rbegin(), w.rend()));
  std::vector<double> brute(4000);
  for (Index k = 0; k < 4000; ++k) brute[k] = x(k);
  std::sort(brute.begin(), brute.end(), std::greater<>());
  for (Index k = 0; k < 100; ++k) EXPECT_EQ(w[k], brute[k]);
}

TEST(Rearrangement, PropertyIdempotentPermutationHomogeneous) {
  Rng rng(3, "rearrangement_props");
  for (int t = 0; t < 300; ++t) {
    auto v = random_signed(rng, 50);
    const auto mu = decreasing_rearrangement(std::span<const double>(v));
    EXPECT_EQ(decreasing_rearrangement(mu.as_sequence()), mu);
    std::reverse(v.begin(), v.end());
    std::rotate(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
    EXPECT_EQ(decreasing_rearrangement(std::span<const double>(v)), mu);
    const double c = rng.uniform(-3.0, 3.0);
    for (double& e : v) e *= c;
    const auto mc = decreasing_rearrangement(std::span<const double>(v));
    ASSERT_EQ(mc.size(), mu.size());
    for (Index k = 0; k < mu.size(); ++k) EXPECT_EQ(mc(k), std::fabs(c) * mu(k));
  }
}

TEST(Dilation, Examples) {
  EXPECT_EQ(dilation(Sequence::finite({2.0, 5.0}), 2), Sequence::finite({2.0, 2.0, 5.0, 5.0}));
  EXPECT_EQ(dilation(Sequence::finite({1.0}), 3), Sequence::finite({1.0, 1.0, 1.0}));
  EXPECT_THROW(dilation(Sequence::unit(0), 0), std::invalid_argument);
  EXPECT_THROW(dilation(Sequence::power_log(1.0, 0.0), 2), DomainError);
}

TEST(Dilation, CompositionProperty) {
  Rng rng(5, "dilation");
  for (int t = 0; t < 200; ++t) {
    const auto x = Sequence::finite(random_signed(rng, 20), rng.uniform_int(0, 4));
    const Index m = rng.uniform_int(1, 6), k = rng.uniform_int(1, 6);
    EXPECT_EQ(dilation(dilation(x, k), m), dilation(x, m * k));
  }
}

TEST(Dilation, TwoTermSubadditivity) {
  Rng rng(17, "subadd");
  for (int t = 0; t < 500; ++t) {
    const auto a = random_signed(rng, 30), b = random_signed(rng, 30);
    std::vector<double> s(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) s[i] += b[i];
    const auto lhs = sorted_abs(s);
    const auto da = dilation(sorted_abs(a), 2), db = dilation(sorted_abs(b), 2);
    for (std::size_t n = 0; n < lhs.size(); ++n) {
      const double r = (n < da.size() ? da[n] : 0.0) + (n < db.size() ? db[n] : 0.0);
      ASSERT_LE(lhs[n], r * (1.0 + 4e-16)) << "trial " << t << " n " << n;
    }
  }
}

TEST(AddScaled, Examples) {
  const auto e0 = Sequence::unit(0);
  EXPECT_TRUE(add_scaled(e0, 1.0, e0, -1.0).is_zero());
  EXPECT_EQ(add_scaled(Sequence::finite({1.0}), 1.0, Sequence::finite({1.0}, 1), 1.0), Sequence::finite({1.0, 1.0}));
  EXPECT_THROW(add_scaled(Sequence::unit(0), 1.0, Sequence::unit(0, IndexDomain::Line), 1.0), DomainError);
}

TEST(Harmonic, MatchesDirectSums) {
  double h = 0.0;
  for (Index m = 1; m <= 200000; ++m) {
    h += 1.0 / double(m);
    if (m < 50 || m % 9973 == 0) ASSERT_NEAR(harmonic_number(m), h, 1e-13 * h) << m;
  }
  EXPECT_EQ(harmonic_number(0), 0.0);
}

TEST(Tail, TelescopingAgainstPartialSumsToTenMillion) {
  // Oracle: sum_{k=n+1}^{10^7} 1/(k(k+1)) = 1/(n+1) - 1/(10^7+1), summed backwards.
  const Index big = 10000000;
  double partial = 0.0;
  for (Index k = big; k >= 1; --k) partial += 1.0 / (double(k) * (double(k) + 1.0));
  const double rest = 1.0 / (double(big) + 1.0);
  const auto t0 = tail_sum_over_k(Sequence::power_log(1.0, 0.0), 0);
  EXPECT_NEAR(t0.mid(), partial + rest, 1e-12);
  EXPECT_LE(t0.lo, 1.0);
  EXPECT_GE(t0.hi, 1.0);
  EXPECT_LE(t0.halfwidth(), 1e-12);
  EXPECT_NEAR(tail_sum_over_k(Sequence::power_log(1.0, 0.0), 9).mid(), 0.1, 1e-12);
}

TEST(Tail, BracketsEncloseBruteForce) {
  for (double a : {0.5, 1.0, 1.5}) {
    for (double b : {0.0, 1.0, 2.0}) {
      const PowerLog g{a, b, 1.0};
      const Sequence x = Sequence::power_log(a, b);
      // Brute force to 10^7 plus the integral bound of the rest.
      const Index n = 20, big = 10000000;
      double s = 0.0;
      for (Index k = big; k > n; --k) s += g(k) / double(k);
      const auto br = tail_sum_over_k(x, n);
      EXPECT_LE(s, br.hi) << a << " " << b;
      const auto rest = power_log_over_k_tail(g, big + 1);
      EXPECT_GE(s + rest.hi, br.lo) << a << " " << b;
    }
  }
}

TEST(Tail, SeriesTailEnclosure) {
  for (double a : {1.5, 2.0, 3.0}) {
    for (double b : {0.0, 0.5, 2.0}) {
      double s = 0.0;
      for (Index k = 2000000; k >= 100; --k) s += std::pow(std::log(k + 2.0), b) / std::pow(k + 1.0, a);
      const auto br = power_log_series_tail(a, b, 100);
      const auto rest = power_log_series_tail(a, b, 2000001);
      EXPECT_LE(s + rest.lo, br.hi * (1 + 1e-14));
      EXPECT_GE(s + rest.hi, br.lo * (1 - 1e-14));
    }
  }
  EXPECT_THROW(power_log_series_tail(1.0, 0.0, 5), DivergentTail);
}

TEST(Tail, FiniteAndEmpty) {
  EXPECT_EQ(tail_sum_over_k(Sequence::unit(0), 0).mid(), 0.0);
  EXPECT_EQ(tail_sum_over_k(Sequence::unit(0), 7).mid(), 0.0);
  const auto x = Sequence::finite({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(tail_sum_over_k(x, 1).mid(), 3.0 / 2.0 + 4.0 / 3.0);
  EXPECT_THROW(tail_sum_over_k(Sequence::unit(0, IndexDomain::Line), 0), DomainError);
}

TEST(Random, DeterministicStreams) {
  Rng a(42, "x"), b(42, "x"), c(42, "y");
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next();
    EXPECT_EQ(va, b.next());
    (void)c;
  }
  EXPECT_NE(Rng(42, "x").next(), Rng(42, "y").next());
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    ASSERT_GE(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}
