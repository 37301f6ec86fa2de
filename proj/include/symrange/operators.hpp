#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symrange/rearrangement.hpp"
#include "symrange/report.hpp"
#include "symrange/sequence.hpp"
#include "symrange/tail.hpp"

namespace symrange {

enum class EvalMethod { Naive, FastConvolution, ClosedForm };

const char* to_string(EvalMethod m);

/// Operator values on the index range [first_index, first_index + size).
/// tail_halfwidth[i] bounds the truncation error of values[i].
struct OperatorOutput {
  Index first_index = 0;
  std::vector<double> values;
  std::vector<double> tail_halfwidth;
  EvalMethod method = EvalMethod::Naive;

  Index size() const { return static_cast<Index>(values.size()); }
  Index end_index() const { return first_index + size(); }
  double at(Index n) const { return values[static_cast<std::size_t>(n - first_index)]; }
  double halfwidth_at(Index n) const { return tail_halfwidth[static_cast<std::size_t>(n - first_index)]; }
  double max_halfwidth() const;
};

/// (S x)(n) = (1/(n+1)) sum_{k<=n} x(k) + sum_{k>n} x(k)/k for n in [0, window),
/// by one prefix pass and one backward suffix pass.
OperatorOutput calderon(const Sequence& x, Index window, const TailOptions& opts = {});
OperatorOutput calderon(const Rearrangement& mu, Index window, const TailOptions& opts = {});

/// K_n(k) = min{1, k/(n+1)}/k, evaluated as min{1/k, 1/(n+1)} so rounding
/// keeps it nonincreasing in k; K_n(0) = 1/(n+1).
inline double calderon_kernel(Index n, Index k) {
  const double head = 1.0 / (static_cast<double>(n) + 1.0);
  return k == 0 ? head : std::min(head, 1.0 / static_cast<double>(k));
}

/// The same operator as sum_k x(k) min{1, k/(n+1)}/k, the k = 0 summand read
/// as x(0)/(n+1).  Direct evaluation, O(window * support).
OperatorOutput calderon_min_kernel(const Sequence& x, Index window, const TailOptions& opts = {});

/// (H x)(n) = (1/pi) sum_{k != n} x(k)/(n-k) for n in [out_lo, out_hi].
///
/// Finite inputs are evaluated exactly up to rounding.  Analytic inputs are
/// truncated past max(2^16, 2(max(|out_lo|, |out_hi|)+1)) and the neglected
/// part is enclosed in the output brackets.  FastConvolution throws
/// std::length_error when the transform length would exceed 2^27.
OperatorOutput hilbert(const Sequence& x, Index out_lo, Index out_hi, EvalMethod method = EvalMethod::FastConvolution);

/// max_i |fast_i - naive_i| / max_i |naive_i| (0 when naive is identically 0).
double normwise_deviation(const OperatorOutput& fast, const OperatorOutput& naive);
/// max |fast_i - naive_i| / |naive_i| over entries with |naive_i| > floor.
double pointwise_deviation(const OperatorOutput& fast, const OperatorOutput& naive, double floor = 1e-12);

/// |(S x)(n)| <= (S mu(x))(n) on [0, window).
VerificationReport verify_pointwise_domination(const Sequence& x, Index window, double tolerance = 1e-12);

/// S mu(x) is nonincreasing on [0, window) and equal to its own rearrangement.
VerificationReport verify_sd_rearrangement_fixed(const Sequence& x, Index window);

/// (1/(2 pi)) (S x)(n) <= |(H x)(-n)| for n in [1, window].  Requires x
/// nonnegative and nonincreasing on Z_+ (DomainError otherwise).
VerificationReport verify_hilbert_lower_bound(const Sequence& x, Index window);

/// ||H x||_{1,inf} / ||x||_1 over the family, with H x evaluated on [-W, W]
/// for W = output_window and 2 W.  Cases "weak11_constant" (at 2 W) and
/// "window_doubling_change" (relative change, contract <= 5%).
VerificationReport estimate_weak11_constant(const std::vector<Sequence>& family, Index output_window = Index{1} << 12);

/// sup ||S x||_p / ||x||_p over finite-support inputs, with the exact
/// P/(n+1) tail of S x past the support enclosed analytically.  Contract:
/// at most p + p/(p-1).
VerificationReport estimate_hardy_constant(double p, const std::vector<Sequence>& family);

/// Band [c1, c2] of (S sigma_m mu(y))(n) / (sigma_m S mu(y))(n) over random
/// nonnegative finite y and the given factors.  Cases "dilation_band_lower"
/// and "dilation_band_upper"; pass when 0.2 <= c1 <= c2 <= 5.
VerificationReport verify_dilation_band(int trials, std::uint64_t seed, const std::vector<Index>& factors = {2, 4, 8});

/// Linearity, positivity, kernel monotonicity, min-kernel agreement and the
/// Hilbert cancellation on even inputs.
VerificationReport operator_property_check(int trials, std::uint64_t seed, double tolerance = 1e-12);

struct BenchRow {
  Index size = 0;
  double naive_seconds = 0.0;
  double fast_seconds = 0.0;
  double normwise_deviation = 0.0;
  double pointwise_deviation = 0.0;
  double speedup() const { return fast_seconds > 0.0 ? naive_seconds / fast_seconds : 0.0; }
};

/// Times both Hilbert routes on random signed inputs of each support size,
/// output window equal to the support.  Each timed region runs alone.
std::vector<BenchRow> bench_hilbert(const std::vector<Index>& sizes, std::uint64_t seed);

/// Bench table as a report: agreement cases per size (tolerance
/// `agreement_tol`) and an informational speedup case per size.
VerificationReport bench_report(const std::vector<BenchRow>& rows, double agreement_tol = 1e-9);

}  // namespace symrange
