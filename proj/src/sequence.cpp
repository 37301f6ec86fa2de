#include "symrange/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "symrange/errors.hpp"

namespace symrange {

namespace {

void require_finite_values(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("sequence values must be finite");
  }
}

}  // namespace

Index PowerLog::monotone_from() const {
  if (beta == 0.0) return 0;
  // log(t+2) >= beta/alpha is sufficient for a nonpositive log-derivative.
  const double ratio = beta / alpha;
  if (ratio > 40.0) return std::numeric_limits<Index>::max() / 4;
  const double t = std::exp(ratio) - 2.0;
  return t <= 0.0 ? 0 : static_cast<Index>(std::ceil(t));
}

Sequence Sequence::zero(IndexDomain domain) { return Sequence(domain, Finite{}); }

Sequence Sequence::finite(std::vector<double> values, Index offset, IndexDomain domain) {
  require_finite_values(values);
  auto first = std::find_if(values.begin(), values.end(), [](double v) { return v != 0.0; });
  if (first == values.end()) return zero(domain);
  auto last = std::find_if(values.rbegin(), values.rend(), [](double v) { return v != 0.0; }).base();
  offset += static_cast<Index>(first - values.begin());
  if (domain == IndexDomain::HalfLine && offset < 0) {
    throw std::invalid_argument("half-line sequence has support at negative index " +
                                std::to_string(offset));
  }
  std::vector<double> trimmed(first, last);
  return Sequence(domain, Finite{offset, std::move(trimmed)});
}

Sequence Sequence::unit(Index k, IndexDomain domain) { return finite({1.0}, k, domain); }

Sequence Sequence::power_log(double alpha, double beta, double scale) {
  return analytic({}, PowerLog{alpha, beta, scale});
}

Sequence Sequence::analytic(std::vector<double> head, PowerLog tail) {
  if (!(tail.alpha > 0.0) || !std::isfinite(tail.alpha)) {
    throw std::invalid_argument("power-log alpha must be a finite positive number");
  }
  if (!(tail.beta >= 0.0) || !std::isfinite(tail.beta)) {
    throw std::invalid_argument("power-log beta must be a finite nonnegative number");
  }
  if (!std::isfinite(tail.scale)) throw std::invalid_argument("power-log scale must be finite");
  require_finite_values(head);
  if (tail.scale == 0.0) return finite(std::move(head));
  return Sequence(IndexDomain::HalfLine, Analytic{std::move(head), tail});
}

bool Sequence::is_zero() const {
  const auto* f = std::get_if<Finite>(&body_);
  return f != nullptr && f->values.empty();
}

double Sequence::operator()(Index k) const {
  if (const auto* f = std::get_if<Finite>(&body_)) {
    const Index i = k - f->offset;
    if (i < 0 || i >= static_cast<Index>(f->values.size())) return 0.0;
    return f->values[static_cast<std::size_t>(i)];
  }
  const auto& a = std::get<Analytic>(body_);
  if (k < 0) return 0.0;
  if (k < static_cast<Index>(a.head.size())) return a.head[static_cast<std::size_t>(k)];
  return a.tail(k);
}

Index Sequence::explicit_begin() const {
  if (const auto* f = std::get_if<Finite>(&body_)) return f->offset;
  return 0;
}

Index Sequence::explicit_end() const {
  if (const auto* f = std::get_if<Finite>(&body_)) {
    return f->offset + static_cast<Index>(f->values.size());
  }
  return static_cast<Index>(std::get<Analytic>(body_).head.size());
}

std::vector<double> Sequence::window(Index n) const {
  if (domain_ != IndexDomain::HalfLine) throw DomainError("window() needs a half-line sequence");
  std::vector<double> out(static_cast<std::size_t>(std::max<Index>(n, 0)));
  for (Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = (*this)(k);
  return out;
}

std::vector<double> dilation(std::span<const double> values, Index m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<double> out;
  out.reserve(values.size() * static_cast<std::size_t>(m));
  for (double v : values) out.insert(out.end(), static_cast<std::size_t>(m), v);
  return out;
}

Sequence dilation(const Sequence& x, Index m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (x.domain() != IndexDomain::HalfLine) throw DomainError("dilation is defined on Z_+ only");
  if (x.is_analytic()) {
    throw DomainError("dilation of an analytic sequence is not a power-log sequence");
  }
  if (x.is_zero()) return x;
  const auto& f = x.finite_body();
  // sigma_m x places x(k) on [k*m, (k+1)*m); zero entries before the offset dilate too.
  return Sequence::finite(dilation(f.values, m), f.offset * m);
}

Sequence add_scaled(const Sequence& x1, double a1, const Sequence& x2, double a2) {
  if (x1.domain() != x2.domain()) throw DomainError("add_scaled: operands live on different index domains");
  if (!std::isfinite(a1) || !std::isfinite(a2)) throw std::invalid_argument("add_scaled: coefficients must be finite");

  if (x1.is_finite() && x2.is_finite()) {
    if (x1.is_zero() && x2.is_zero()) return Sequence::zero(x1.domain());
    Index lo = std::numeric_limits<Index>::max();
    Index hi = std::numeric_limits<Index>::min();
    for (const Sequence* s : {&x1, &x2}) {
      if (s->is_zero()) continue;
      lo = std::min(lo, s->explicit_begin());
      hi = std::max(hi, s->explicit_end());
    }
    std::vector<double> values(static_cast<std::size_t>(hi - lo));
    for (Index k = lo; k < hi; ++k) values[static_cast<std::size_t>(k - lo)] = a1 * x1(k) + a2 * x2(k);
    return Sequence::finite(std::move(values), lo, x1.domain());
  }

  if (x1.is_analytic() && x2.is_analytic()) {
    const PowerLog& t1 = x1.analytic_body().tail;
    const PowerLog& t2 = x2.analytic_body().tail;
    if (t1.alpha != t2.alpha || t1.beta != t2.beta) {
      throw DomainError("add_scaled: analytic operands must share alpha and beta");
    }
    const Index head = std::max(x1.explicit_end(), x2.explicit_end());
    std::vector<double> values(static_cast<std::size_t>(head));
    for (Index k = 0; k < head; ++k) values[static_cast<std::size_t>(k)] = a1 * x1(k) + a2 * x2(k);
    PowerLog tail = t1;
    tail.scale = a1 * t1.scale + a2 * t2.scale;
    return Sequence::analytic(std::move(values), tail);
  }

  const bool first_analytic = x1.is_analytic();
  const Sequence& an = first_analytic ? x1 : x2;
  const Sequence& fin = first_analytic ? x2 : x1;
  const double a_an = first_analytic ? a1 : a2;
  const double a_fin = first_analytic ? a2 : a1;
  const Index head = std::max(an.explicit_end(), fin.is_zero() ? 0 : fin.explicit_end());
  std::vector<double> values(static_cast<std::size_t>(head));
  for (Index k = 0; k < head; ++k) values[static_cast<std::size_t>(k)] = a_an * an(k) + a_fin * fin(k);
  PowerLog tail = an.analytic_body().tail;
  tail.scale *= a_an;
  return Sequence::analytic(std::move(values), tail);
}

Sequence scaled(const Sequence& x, double c) { return add_scaled(x, c, Sequence::zero(x.domain()), 0.0); }

}  // namespace symrange
