#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "src/fft_convolution.hpp"
#include "symrange/errors.hpp"
#include "symrange/families.hpp"
#include "symrange/operators.hpp"
#include "symrange/random.hpp"

using namespace symrange;

namespace {

// (S x)(n) straight from the definition, O(n * support).
double calderon_oracle(const std::vector<double>& x, Index n) {
  long double head = 0.0L, tail = 0.0L;
  for (Index k = 0; k < static_cast<Index>(x.size()); ++k) {
    if (k <= n) {
      head += x[k];
    } else {
      tail += static_cast<long double>(x[k]) / k;
    }
  }
  return static_cast<double>(head / (n + 1) + tail);
}

double hilbert_oracle(const std::vector<double>& x, Index offset, Index n) {
  long double s = 0.0L;
  for (Index i = 0; i < static_cast<Index>(x.size()); ++i) {
    const Index k = offset + i;
    if (k != n) s += static_cast<long double>(x[i]) / (n - k);
  }
  return static_cast<double>(s / std::numbers::pi_v<long double>);
}

std::vector<double> random_values(Rng& rng, int len) {
  std::vector<double> v(static_cast<std::size_t>(len));
  for (double& e : v) e = rng.uniform(-2.0, 2.0);
  return v;
}

}  // namespace

TEST(Calderon, Examples) {
  const auto s = calderon(Sequence::unit(0), 50);
  for (Index n = 0; n < 50; ++n) EXPECT_DOUBLE_EQ(s.at(n), 1.0 / (n + 1.0));
  const auto h = calderon(Sequence::power_log(1.0, 0.0), 1 << 12);
  EXPECT_NEAR(h.at(0), 2.0, 1e-12);
  EXPECT_NEAR(h.at(1), 1.25, 1e-12);
  EXPECT_LE(h.max_halfwidth(), 1e-12);
}

TEST(Calderon, MatchesDefinition) {
  Rng rng(41, "calderon_oracle");
  for (int t = 0; t < 100; ++t) {
    const auto v = random_values(rng, static_cast<int>(rng.uniform_int(1, 150)));
    const auto x = Sequence::finite(v);
    const auto s = calderon(x, 200);
    const auto mk = calderon_min_kernel(x, 200);
    for (Index n = 0; n < 200; ++n) {
      const double want = calderon_oracle(v, n);
      ASSERT_NEAR(s.at(n), want, 1e-12 * std::max(1.0, std::fabs(want))) << t << " " << n;
      ASSERT_NEAR(mk.at(n), want, 1e-12 * std::max(1.0, std::fabs(want))) << t << " " << n;
    }
  }
}

TEST(Calderon, AnalyticAgainstLongSums) {
  // x(k) = 1/(k+1)^2: compare with explicit sums to 2*10^6 plus the remainder bound.
  const auto x = Sequence::power_log(2.0, 0.0);
  const auto s = calderon(x, 512);
  const Index big = 2000000;
  for (Index n : {0, 1, 10, 511}) {
    long double head = 0.0L, tail = 0.0L;
    for (Index k = 0; k <= n; ++k) head += 1.0L / ((k + 1.0L) * (k + 1.0L));
    for (Index k = big; k > n; --k) tail += 1.0L / ((k + 1.0L) * (k + 1.0L) * k);
    const double rest = 1.0 / (2.0 * double(big) * double(big));
    EXPECT_NEAR(s.at(n), double(head / (n + 1) + tail), rest + 1e-12) << n;
  }
}

TEST(Calderon, RejectsLineAndBadWindow) {
  EXPECT_THROW(calderon(Sequence::unit(0, IndexDomain::Line), 4), DomainError);
  EXPECT_THROW(calderon(Sequence::unit(0), 0), std::invalid_argument);
}

TEST(Calderon, KernelMonotone) {
  for (Index n = 0; n < 200; ++n) {
    for (Index k = 1; k < 1000; ++k) ASSERT_LE(calderon_kernel(n, k + 1), calderon_kernel(n, k));
  }
  EXPECT_EQ(calderon_kernel(3, 0), 0.25);
}

TEST(Hilbert, UnitSpike) {
  for (auto m : {EvalMethod::Naive, EvalMethod::FastConvolution}) {
    const auto h = hilbert(Sequence::unit(0, IndexDomain::Line), -20, 20, m);
    for (Index n = -20; n <= 20; ++n) EXPECT_NEAR(h.at(n), n == 0 ? 0.0 : 1.0 / (std::numbers::pi * n), 1e-15);
  }
}

TEST(Hilbert, NaiveAndFastMatchOracle) {
  Rng rng(43, "hilbert_oracle");
  for (int t = 0; t < 30; ++t) {
    const auto v = random_values(rng, static_cast<int>(rng.uniform_int(1, 300)));
    const Index off = rng.uniform_int(-100, 100);
    const auto x = Sequence::finite(v, off, IndexDomain::Line);
    const Index lo = rng.uniform_int(-400, 0), hi = lo + rng.uniform_int(0, 500);
    const auto a = hilbert(x, lo, hi, EvalMethod::Naive);
    const auto b = hilbert(x, lo, hi, EvalMethod::FastConvolution);
    double scale = 0.0;
    for (Index n = lo; n <= hi; ++n) scale = std::max(scale, std::fabs(hilbert_oracle(v, off, n)));
    for (Index n = lo; n <= hi; ++n) {
      const double want = hilbert_oracle(v, off, n);
      ASSERT_NEAR(a.at(n), want, 1e-12 * std::max(1.0, scale));
      ASSERT_NEAR(b.at(n), want, 1e-9 * std::max(1.0, scale));
    }
  }
}

TEST(Hilbert, HalfLineInputsAndAnalyticTail) {
  const auto x = Sequence::finite({1.0, 0.5}, 0);
  const auto h = hilbert(x, -3, 3, EvalMethod::Naive);
  EXPECT_NEAR(h.at(-3), hilbert_oracle({1.0, 0.5}, 0, -3), 1e-15);
  // 1/(k+1)^2 on Z_+: tail brackets must enclose a long explicit sum.
  const auto g = hilbert(Sequence::power_log(2.0, 0.0), -5, 5, EvalMethod::FastConvolution);
  for (Index n = -5; n <= 5; ++n) {
    long double s = 0.0L;
    for (Index k = 0; k < 4000000; ++k) {
      if (k != n) s += 1.0L / ((k + 1.0L) * (k + 1.0L) * (n - k));
    }
    const double want = double(s / std::numbers::pi_v<long double>);
    EXPECT_LE(std::fabs(g.at(n) - want), g.halfwidth_at(n) + 1e-12) << n;
  }
}

TEST(Hilbert, EvenInputsCancelAtZero) {
  Rng rng(47, "even");
  for (int t = 0; t < 50; ++t) {
    const auto half = random_values(rng, 40);
    std::vector<double> v(2 * half.size() - 1);
    for (std::size_t i = 0; i < half.size(); ++i) v[half.size() - 1 + i] = v[half.size() - 1 - i] = half[i];
    const auto h = hilbert(Sequence::finite(v, -Index(half.size()) + 1, IndexDomain::Line), 0, 0, EvalMethod::Naive);
    EXPECT_NEAR(h.at(0), 0.0, 1e-14);
  }
}

TEST(Hilbert, Errors) {
  EXPECT_THROW(hilbert(Sequence::unit(0), 3, 2), std::invalid_argument);
  EXPECT_THROW(hilbert(Sequence::unit(0), 0, 2, EvalMethod::ClosedForm), std::invalid_argument);
}

TEST(FftConvolution, TransformLength) {
  EXPECT_EQ(detail::transform_length(1), 1);
  EXPECT_EQ(detail::transform_length(5), 8);
  EXPECT_EQ(detail::transform_length(4096), 4096);
  EXPECT_THROW(detail::transform_length(detail::kMaxTransformLength + 1), std::length_error);
}

TEST(FftConvolution, MatchesDirectConvolution) {
  Rng rng(53, "conv");
  for (int t = 0; t < 20; ++t) {
    const auto a = random_values(rng, static_cast<int>(rng.uniform_int(1, 200)));
    const auto g = random_values(rng, static_cast<int>(rng.uniform_int(1, 200)));
    const Index first = rng.uniform_int(0, 50), count = rng.uniform_int(1, 100);
    const auto c = detail::linear_convolution_segment(a, g, first, count);
    ASSERT_EQ(static_cast<Index>(c.size()), count);
    for (Index j = 0; j < count; ++j) {
      double s = 0.0;
      for (Index i = 0; i < static_cast<Index>(a.size()); ++i) {
        const Index k = first + j - i;
        if (k >= 0 && k < static_cast<Index>(g.size())) s += a[i] * g[k];
      }
      ASSERT_NEAR(c[j], s, 1e-11);
    }
  }
}

TEST(OperatorChecks, DominationAndFixedPoint) {
  const auto fam = generate_family(FamilyKind::RandomSigned, 50, 3);
  for (const auto& x : fam) EXPECT_TRUE(verify_pointwise_domination(x, 128).passed());
  EXPECT_TRUE(verify_sd_rearrangement_fixed(Sequence::power_log(1.0, 0.0), 4096).passed());
}

TEST(OperatorChecks, HilbertLowerBoundOnDecreasingInputs) {
  const auto fam = generate_family(FamilyKind::RandomNonnegDecreasing, 30, 5);
  for (const auto& x : fam) EXPECT_TRUE(verify_hilbert_lower_bound(x, 128).passed());
  EXPECT_THROW(verify_hilbert_lower_bound(Sequence::finite({1.0, 2.0}), 8), DomainError);
}

TEST(OperatorChecks, WeakConstantOfSpike) {
  const auto rep = estimate_weak11_constant({Sequence::unit(0, IndexDomain::Line)});
  EXPECT_NEAR(rep.observed("weak11_constant"), 2.0 / std::numbers::pi, 1e-12);
}

TEST(OperatorChecks, HardyBoundEnclosesSpike) {
  const auto rep = estimate_hardy_constant(2.0, {Sequence::unit(0)});
  EXPECT_GE(rep.observed("hardy_constant"), std::numbers::pi / std::sqrt(6.0) - 1e-12);
  EXPECT_TRUE(rep.passed());
  EXPECT_THROW(estimate_hardy_constant(1.0, {Sequence::unit(0)}), std::invalid_argument);
}

TEST(Families, Deterministic) {
  for (auto k : {FamilyKind::RandomSigned, FamilyKind::RandomNonnegDecreasing, FamilyKind::PowerLogGrid,
                 FamilyKind::Spikes}) {
    EXPECT_EQ(generate_family(k, 3, 7), generate_family(k, 3, 7)) << to_string(k);
    EXPECT_EQ(family_kind_from_string(to_string(k)), k);
  }
  const auto dec = generate_family(FamilyKind::RandomNonnegDecreasing, 40, 9);
  for (const auto& x : dec) {
    const auto& v = x.finite_body().values;
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LE(v[i], v[i - 1]);
  }
  const auto grid = generate_family(FamilyKind::PowerLogGrid, 1, 1);
  EXPECT_EQ(grid.front(), Sequence::power_log(1.0, 0.0));
  EXPECT_THROW(generate_family(FamilyKind::Spikes, 0, 1), std::invalid_argument);
}
