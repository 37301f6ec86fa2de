#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/rearrangement.hpp"
#include "symrange/report.hpp"
#include "symrange/sequence.hpp"

namespace symrange {

enum class TailArgument { None, FiniteSupportX, AnalyticComparison };

const char* to_string(TailArgument t);

/// Evidence that mu(x) <= S mu(y) on all of Z_+: an explicit check on
/// [0, window) and an argument for the indices beyond.
struct DominationCertificate {
  Sequence x;
  Sequence y;
  Index window = 0;
  bool window_verified = false;
  TailArgument tail_argument = TailArgument::None;
  /// First n < window with mu(n, x) > (S mu(y))(n), or -1.
  Index first_violation = -1;
  /// max over the window of mu(n, x) / (S mu(y))(n).
  double max_ratio = 0.0;
  std::string detail;

  bool verified() const { return window_verified && tail_argument != TailArgument::None; }
};

/// Verifies mu(x) <= S mu(y).  The window grows to cover the explicit part of
/// mu(x).  Finite x is settled by the window (FiniteSupportX).  For analytic
/// x the power-log asymptotics of mu(x) and S mu(y) are compared
/// lexicographically in (exponent, -log exponent), then by leading constant;
/// the limit ratio must be at most 1 and the ratio over the last octave of
/// the window must stay at most 1 while approaching the limit.
/// Throws DomainError when mu(y) is outside the domain of S.
DominationCertificate check_domination(const Sequence& x, const Sequence& y, Index window = Index{1} << 14);

struct GridConfig {
  /// Scales are c = 2^(j / steps_per_octave).
  int steps_per_octave = 4;
  int min_octave = -64;
  int max_octave = 64;
  /// Certificate window (extended to the support of mu(x)).
  Index window = Index{1} << 14;
  /// How many of the best candidates are re-verified before giving up.
  int max_verified = 8;

  static GridConfig named(const std::string& name);
};

struct FNormEstimate {
  double upper = 0.0;
  std::optional<double> lower;
  DominationCertificate witness;
  /// Shape of the winning witness profile before scaling.
  std::string shape;
  double scale = 0.0;
};

/// A candidate witness profile z (nonnegative, nonincreasing) for the search.
struct WitnessShape {
  std::string name;
  Rearrangement profile;
};

/// Upper estimates of ||x||_F = inf{ ||y||_E : mu(x) <= S mu(y) } over the
/// scaled shapes c z for z in: mu(x) itself, its dyadic truncations, a fixed
/// set of power-log generators, and any caller-supplied profiles.  For each
/// shape the least admissible c is computed and rounded up to the grid, so a
/// finer grid never yields a larger value.  Generator data is computed once.
class WitnessSearch {
 public:
  WitnessSearch(SpaceSpec space, GridConfig grid = {});

  const SpaceSpec& space() const { return space_; }
  const GridConfig& grid() const { return grid_; }

  /// Throws NoWitnessFound when no candidate verifies.
  FNormEstimate run(const Sequence& x, const std::vector<WitnessShape>& extra = {}) const;

 private:
  struct Generator {
    PowerLog g;
    double norm;
    OperatorOutput s;
  };
  SpaceSpec space_;
  GridConfig grid_;
  std::vector<Generator> generators_;
};

FNormEstimate f_norm_upper(const Sequence& x, const SpaceSpec& space, const GridConfig& grid = {});

/// sup_n mu(n, x)(n+1)/(H_{n+1}+1), a lower bound of ||x||_F for E = weak-l1.
double weak_l1_f_lower_bound(const Rearrangement& mu);

struct WeakL1Membership {
  bool member = false;
  double c_a = 0.0;
};

/// c_a = sup_n mu(n, x)(n+1)/log(n+2), +inf when unbounded.
WeakL1Membership weak_l1_membership(const Sequence& x, Index window = kDefaultWindow);

/// (H_{n+1} + 1)/(n+1): S applied to mu(k) = 1/(k+1).
double harmonic_calderon_closed_form(Index n);

/// ||x1 + x2||_F <= 2 c_E^2 (||x1||_F + ||x2||_F) on random pairs, with
/// every norm replaced by its search estimate (grid slack 2^(1/steps)) and
/// the sum also offered the witness sigma_2 mu(y1) + sigma_2 mu(y2).
VerificationReport verify_f_quasitriangle(const SpaceSpec& space, int trials, std::uint64_t seed, double c_e,
                                          const GridConfig& grid = {});

/// Probes S : E -> G for each G in the catalog (unbounded when the sup ratio
/// exceeds 10 at window `window`) and, for bounded G, checks
/// ||x||_G <= C ||x||_F on certificate-generated members of F.
VerificationReport verify_minimality(const SpaceSpec& space, const std::vector<SpaceSpec>& catalog, int trials,
                                     std::uint64_t seed, Index window = kDefaultWindow, const GridConfig& grid = {});

/// The fixed candidate catalog { lp(1.5), lp(2), lp(3), weak_l1, llog, m1inf }.
std::vector<SpaceSpec> minimality_catalog();

/// Two-sided comparison of mu(H x) with S mu(x): an upper constant C1 with
/// window-doubling stability and the lower bound on nonincreasing inputs.
VerificationReport verify_hilbert_optimal_range(int trials, std::uint64_t seed);

}  // namespace symrange
