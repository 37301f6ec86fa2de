#include "symrange/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "symrange/errors.hpp"

namespace symrange {

namespace {
constexpr Index kExplicitBudget = Index{1} << 26;

void sort_nonincreasing(std::vector<double>& v) { std::stable_sort(v.begin(), v.end(), std::greater<>()); }
}  // namespace

Rearrangement::Rearrangement(std::vector<double> values, std::optional<PowerLog> tail)
    : values_(std::move(values)), tail_(tail) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || (i > 0 && values_[i] > values_[i - 1])) {
      throw std::invalid_argument("rearrangement window must be positive and nonincreasing");
    }
  }
  if (tail_ && !(tail_->scale > 0.0)) throw std::invalid_argument("rearrangement tail must be positive");
  if (tail_ && values_.empty()) throw std::invalid_argument("rearrangement tail needs a nonempty window");
}

double Rearrangement::operator()(Index n) const {
  if (n < 0) return 0.0;
  if (n < size()) return values_[static_cast<std::size_t>(n)];
  return tail_ ? (*tail_)(n) : 0.0;
}

std::vector<double> Rearrangement::window(Index n) const {
  std::vector<double> out(static_cast<std::size_t>(std::max<Index>(n, 0)));
  for (Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = (*this)(k);
  return out;
}

Sequence Rearrangement::as_sequence() const {
  if (tail_) return Sequence::analytic(values_, *tail_);
  return Sequence::finite(values_);
}

Rearrangement decreasing_rearrangement(std::span<const double> values) {
  std::vector<double> mags;
  mags.reserve(values.size());
  for (double v : values) {
    if (v != 0.0) mags.push_back(std::fabs(v));
  }
  sort_nonincreasing(mags);
  return Rearrangement(std::move(mags), std::nullopt);
}

Rearrangement decreasing_rearrangement(const Sequence& x, Index window) {
  if (x.is_finite()) return decreasing_rearrangement(x.finite_body().values);

  const auto& body = x.analytic_body();
  PowerLog tail = body.tail;
  tail.scale = std::fabs(tail.scale);
  const Index k_mono = tail.monotone_from();
  const Index irregular_end = std::max(static_cast<Index>(body.head.size()), k_mono);
  if (irregular_end > kExplicitBudget) {
    throw DomainError("power-log tail (alpha=" + std::to_string(tail.alpha) + ", beta=" +
                      std::to_string(tail.beta) + ") is monotone only beyond index " +
                      std::to_string(k_mono) + "; head cannot be resolved");
  }

  double head_min = std::numeric_limits<double>::infinity();
  for (Index k = 0; k < irregular_end; ++k) {
    const double v = std::fabs(x(k));
    if (v == 0.0) {
      throw DomainError("analytic sequence has a zero head entry at index " + std::to_string(k) +
                        "; its rearrangement would shift the tail");
    }
    head_min = std::min(head_min, v);
  }

  Index len = std::max({window, irregular_end, Index{1}});
  while (len < kExplicitBudget && tail(len) > head_min) ++len;
  if (len >= kExplicitBudget) {
    throw DomainError("head value " + std::to_string(head_min) +
                      " is not dominated by the tail within the explicit budget");
  }

  std::vector<double> mags(static_cast<std::size_t>(len));
  for (Index k = 0; k < len; ++k) mags[static_cast<std::size_t>(k)] = std::fabs(x(k));
  sort_nonincreasing(mags);
  return Rearrangement(std::move(mags), tail);
}

}  // namespace symrange
