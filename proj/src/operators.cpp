#include "symrange/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft_convolution.hpp"
#include "symrange/errors.hpp"

namespace symrange {

namespace {

constexpr Index kHilbertTruncationFloor = Index{1} << 16;

void require_half_line(const Sequence& x, const char* what) {
  if (x.domain() != IndexDomain::HalfLine) throw DomainError(std::string(what) + " needs a sequence on Z_+");
}

void require_window(Index window) {
  if (window < 1) throw std::invalid_argument("operator window must be >= 1");
}

// The enclosure of the product set {t * f : t in T, f in [f_lo, f_hi]}.
Bracket product_hull(const Bracket& t, double f_lo, double f_hi) {
  const double c[4] = {t.lo * f_lo, t.lo * f_hi, t.hi * f_lo, t.hi * f_hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

std::vector<double> hilbert_naive(std::span<const double> a, Index s0, Index lo, Index hi) {
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
  const Index sz = static_cast<Index>(a.size());
  for (Index n = lo; n <= hi; ++n) {
    double s = 0.0;
    for (Index j = 0; j < sz; ++j) {
      const Index k = s0 + j;
      if (k != n) s += a[static_cast<std::size_t>(j)] / static_cast<double>(n - k);
    }
    out[static_cast<std::size_t>(n - lo)] = s * std::numbers::inv_pi;
  }
  return out;
}

std::vector<double> hilbert_fast(std::span<const double> a, Index s0, Index lo, Index hi) {
  const Index sz = static_cast<Index>(a.size());
  const Index len = hi - lo + 1;
  // Kernel h(d) = 1/d on the differences n - k that can occur.
  const Index d_min = lo - s0 - sz + 1;
  std::vector<double> g(static_cast<std::size_t>(len + sz - 1));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Index d = d_min + static_cast<Index>(i);
    g[i] = d == 0 ? 0.0 : 1.0 / static_cast<double>(d);
  }
  auto out = detail::linear_convolution_segment(a, g, sz - 1, len);
  for (double& v : out) v *= std::numbers::inv_pi;
  return out;
}

}  // namespace

const char* to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::Naive: return "naive";
    case EvalMethod::FastConvolution: return "fast";
    case EvalMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

double OperatorOutput::max_halfwidth() const {
  double m = 0.0;
  for (double h : tail_halfwidth) m = std::max(m, h);
  return m;
}

OperatorOutput calderon(const Sequence& x, Index window, const TailOptions& opts) {
  require_half_line(x, "calderon");
  require_window(window);
  OperatorOutput out;
  out.method = EvalMethod::Naive;
  out.values.assign(static_cast<std::size_t>(window), 0.0);
  out.tail_halfwidth.assign(static_cast<std::size_t>(window), 0.0);

  // Suffix sum T(window-1) = sum_{k >= window} x(k)/k.
  Bracket beyond;
  if (x.is_finite()) {
    double s = 0.0;
    for (Index k = x.explicit_end() - 1; k >= std::max(window, x.explicit_begin()); --k) {
      s += x(k) / static_cast<double>(k);
    }
    beyond = Bracket::exact(s);
  } else {
    beyond = tail_sum_over_k(x, window - 1, opts);
  }

  std::vector<double> suffix(static_cast<std::size_t>(window));
  double t = beyond.mid();
  for (Index n = window - 1; n >= 0; --n) {
    suffix[static_cast<std::size_t>(n)] = t;
    if (n > 0) t += x(n) / static_cast<double>(n);
  }
  const Index dense_end = x.is_finite() ? std::min(window, x.explicit_end()) : window;
  double prefix = 0.0;
  for (Index n = 0; n < window; ++n) {
    if (n < dense_end) prefix += x(n);
    out.values[static_cast<std::size_t>(n)] = prefix / (static_cast<double>(n) + 1.0) + suffix[static_cast<std::size_t>(n)];
    out.tail_halfwidth[static_cast<std::size_t>(n)] = beyond.halfwidth();
  }
  return out;
}

OperatorOutput calderon(const Rearrangement& mu, Index window, const TailOptions& opts) {
  return calderon(mu.as_sequence(), window, opts);
}

OperatorOutput calderon_min_kernel(const Sequence& x, Index window, const TailOptions& opts) {
  require_half_line(x, "calderon_min_kernel");
  require_window(window);
  OperatorOutput out;
  out.method = EvalMethod::Naive;
  out.values.assign(static_cast<std::size_t>(window), 0.0);
  out.tail_halfwidth.assign(static_cast<std::size_t>(window), 0.0);

  Index dense_end = x.explicit_end();
  Bracket beyond;
  if (x.is_analytic()) {
    dense_end = std::max(dense_end, window + 1);
    beyond = tail_sum_over_k(x, dense_end - 1, opts);
  }
  const Index begin = x.explicit_begin();
  for (Index n = 0; n < window; ++n) {
    const double n1 = static_cast<double>(n) + 1.0;
    double s = 0.0;
    for (Index k = begin; k < dense_end; ++k) {
      s += x(k) * calderon_kernel(n, k);
    }
    out.values[static_cast<std::size_t>(n)] = s + beyond.mid();
    out.tail_halfwidth[static_cast<std::size_t>(n)] = beyond.halfwidth();
  }
  return out;
}

OperatorOutput hilbert(const Sequence& x, Index out_lo, Index out_hi, EvalMethod method) {
  if (out_lo > out_hi) throw std::invalid_argument("hilbert: empty output range");
  if (method == EvalMethod::ClosedForm) throw std::invalid_argument("hilbert has no closed-form route");
  OperatorOutput out;
  out.first_index = out_lo;
  out.method = method;
  const auto len = static_cast<std::size_t>(out_hi - out_lo + 1);
  out.tail_halfwidth.assign(len, 0.0);

  std::vector<double> dense;
  Index s0 = 0;
  Index cut = 0;
  if (x.is_finite()) {
    dense = x.finite_body().values;
    s0 = x.finite_body().offset;
  } else {
    const Index reach = std::max(std::abs(out_lo), std::abs(out_hi)) + 1;
    cut = std::max(kHilbertTruncationFloor, 2 * reach);
    dense = x.window(cut);
  }

  if (dense.empty()) {
    out.values.assign(len, 0.0);
  } else if (method == EvalMethod::Naive) {
    out.values = hilbert_naive(dense, s0, out_lo, out_hi);
  } else {
    out.values = hilbert_fast(dense, s0, out_lo, out_hi);
  }

  if (x.is_analytic()) {
    // sum_{k >= cut} x(k)/(k-n) = sum x(k)/k * k/(k-n), and k/(k-n) lies
    // between 1 and cut/(cut-n).
    const Bracket t = tail_sum_over_k(x, cut - 1);
    const double cd = static_cast<double>(cut);
    for (Index n = out_lo; n <= out_hi; ++n) {
      const double f = cd / (cd - static_cast<double>(n));
      const Bracket r = product_hull(t, std::min(1.0, f), std::max(1.0, f));
      const auto i = static_cast<std::size_t>(n - out_lo);
      out.values[i] -= r.mid() * std::numbers::inv_pi;
      out.tail_halfwidth[i] = r.halfwidth() * std::numbers::inv_pi;
    }
  }
  return out;
}

double normwise_deviation(const OperatorOutput& fast, const OperatorOutput& naive) {
  if (fast.size() != naive.size()) throw std::invalid_argument("deviation: outputs of different length");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < naive.values.size(); ++i) {
    num = std::max(num, std::fabs(fast.values[i] - naive.values[i]));
    den = std::max(den, std::fabs(naive.values[i]));
  }
  return den > 0.0 ? num / den : num;
}

double pointwise_deviation(const OperatorOutput& fast, const OperatorOutput& naive, double floor) {
  if (fast.size() != naive.size()) throw std::invalid_argument("deviation: outputs of different length");
  double worst = 0.0;
  for (std::size_t i = 0; i < naive.values.size(); ++i) {
    const double ref = std::fabs(naive.values[i]);
    if (ref > floor) worst = std::max(worst, std::fabs(fast.values[i] - naive.values[i]) / ref);
  }
  return worst;
}

}  // namespace symrange
