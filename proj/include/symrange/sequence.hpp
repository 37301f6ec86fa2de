#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace symrange {

using Index = std::int64_t;

enum class IndexDomain { HalfLine, Line };

/// scale * log(k+2)^beta / (k+1)^alpha on Z_+, alpha > 0, beta >= 0.
struct PowerLog {
  double alpha = 1.0;
  double beta = 0.0;
  double scale = 1.0;

  double operator()(Index k) const { return scale * unit(k); }

  double unit(Index k) const {
    const double t = static_cast<double>(k);
    const double num = beta == 0.0 ? 1.0 : std::pow(std::log(t + 2.0), beta);
    const double den = alpha == 1.0 ? t + 1.0 : std::pow(t + 1.0, alpha);
    return num / den;
  }

  /// First integer K such that t -> log(t+2)^beta/(t+1)^alpha is
  /// nonincreasing on [K, inf).
  Index monotone_from() const;

  bool operator==(const PowerLog&) const = default;
};

/// A real sequence on Z_+ or Z.
///
/// Finite sequences store their support as a dense block starting at
/// `offset`; leading and trailing zeros are trimmed, so the zero sequence is
/// the unique finite sequence with no stored values.  Analytic sequences live
/// on Z_+ and are explicit `head` values followed by a PowerLog tail that
/// applies from index head.size() on.
class Sequence {
 public:
  struct Finite {
    Index offset = 0;
    std::vector<double> values;
    bool operator==(const Finite&) const = default;
  };
  struct Analytic {
    std::vector<double> head;
    PowerLog tail;
    bool operator==(const Analytic&) const = default;
  };

  Sequence() = default;

  static Sequence zero(IndexDomain domain = IndexDomain::HalfLine);
  static Sequence finite(std::vector<double> values, Index offset = 0,
                         IndexDomain domain = IndexDomain::HalfLine);
  /// The unit vector e_k.
  static Sequence unit(Index k, IndexDomain domain = IndexDomain::HalfLine);
  static Sequence power_log(double alpha, double beta, double scale = 1.0);
  static Sequence analytic(std::vector<double> head, PowerLog tail);

  IndexDomain domain() const { return domain_; }
  bool is_finite() const { return std::holds_alternative<Finite>(body_); }
  bool is_analytic() const { return std::holds_alternative<Analytic>(body_); }
  bool is_zero() const;

  const Finite& finite_body() const { return std::get<Finite>(body_); }
  const Analytic& analytic_body() const { return std::get<Analytic>(body_); }

  /// Value at index k (zero outside a finite support).
  double operator()(Index k) const;

  /// First index past the stored support (finite) or past the explicit head
  /// (analytic).
  Index explicit_end() const;
  /// First stored index (0 for analytic sequences).
  Index explicit_begin() const;

  /// Values on [0, n) for a half-line sequence.
  std::vector<double> window(Index n) const;

  bool operator==(const Sequence&) const = default;

 private:
  Sequence(IndexDomain domain, std::variant<Finite, Analytic> body)
      : domain_(domain), body_(std::move(body)) {}

  IndexDomain domain_ = IndexDomain::HalfLine;
  std::variant<Finite, Analytic> body_ = Finite{};
};

/// (sigma_m x)(n) = x(floor(n/m)).  Finite half-line sequences only.
Sequence dilation(const Sequence& x, Index m);
std::vector<double> dilation(std::span<const double> values, Index m);

/// a1*x1 + a2*x2.  Analytic operands must share (alpha, beta) when both are
/// analytic.
Sequence add_scaled(const Sequence& x1, double a1, const Sequence& x2, double a2);

Sequence scaled(const Sequence& x, double c);

}  // namespace symrange
