#pragma once

// Forward iteration of x' = q/(+-p + x^nu) for any nu, in exact or floating
// arithmetic, plus the orbit diagnostics built on it.

#include <optional>
#include <utility>
#include <vector>

#include "horadyn/equation.hpp"
#include "horadyn/rational.hpp"

namespace horadyn::dynamics {

enum class Plane { Exact, Floating };

enum class OrbitStatus { Completed, HitSingularity, NearSingular };

const char* to_string(Plane plane) noexcept;
const char* to_string(OrbitStatus status) noexcept;

/// |+-p + x^nu| below this multiple of max(p, 1) halts a floating orbit.
inline constexpr double kNearSingularGuard = 1e-12;

struct Orbit {
  EquationSpec eq;
  Rational x0;
  Plane plane = Plane::Floating;
  /// values[n] = x_n. Always filled; in the exact plane it is the rounded
  /// image of `exact`.
  std::vector<double> values;
  /// Exact iterates, exact plane only.
  std::vector<Rational> exact;
  OrbitStatus status = OrbitStatus::Completed;
  /// Index of the first iterate that could not be formed, -1 when completed.
  long status_step = -1;

  std::size_t size() const { return values.size(); }
};

/// One exact step; throws Singularity when the denominator is exactly zero.
Rational step(const EquationSpec& eq, const Rational& x);

/// One floating step; throws NearSingularity when the guard trips.
double step(const EquationSpec& eq, double x);

/// Iterates from x0 for `steps` steps, stopping early at a singularity.
/// Exact iterates grow in size roughly like nu^n digits, so the exact plane
/// is only practical for nu = 1 or short orbits.
Orbit iterate(const EquationSpec& eq, const Rational& x0, long steps, Plane plane);

/// Floating-plane orbit from a real starting value.
Orbit iterate(const EquationSpec& eq, double x0, long steps);

struct BoundsEnvelope {
  double lo;
  double hi;

  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

/// [q/(p + (q/p)^nu), q/p] for positive Plus orbits. The upper bound holds
/// from step 1, the lower one from step 2 (from step 1 when x0 <= q/p).
/// Throws WrongBranch for the Minus branch.
BoundsEnvelope bounds_envelope(const EquationSpec& eq);

/// Envelope for negative solutions of the Minus branch.
/// Odd nu: the reflection [-q/p, -q/(p + (q/p)^nu)], with the same step-1 /
/// step-2 split as bounds_envelope.
/// Even nu: [-p^(1/nu), -q/p]; a negative solution needs y_n^nu < p at every
/// step. Throws WrongBranch for the Plus branch.
BoundsEnvelope negative_envelope(const EquationSpec& eq);

enum class Side { Above, Below, At };

struct OscillationProfile {
  std::vector<Side> sides;
  /// Maximal runs of equal sides, in order.
  std::vector<std::pair<Side, long>> semicycles;
};

/// Side of every iterate relative to `center` (|x - center| <= tol is At).
/// Throws OrbitTooShort for fewer than three completed steps.
OscillationProfile oscillation_profile(const Orbit& orbit, double center, double tol = 0.0);

struct DetectedPeriod {
  long period;
  /// First index from which the orbit is periodic to tolerance.
  long phase;
};

inline constexpr double kDefaultPeriodTol = 1e-9;
inline constexpr long kDefaultBurnIn = 100;

/// Smallest period p <= max_period with |x_{n+p} - x_n| < tol for every n at
/// or past the burn-in. Throws OrbitTooShort when the orbit has fewer than
/// 3 * max_period + burn_in values.
std::optional<DetectedPeriod> detect_period(const Orbit& orbit, long max_period, double tol = kDefaultPeriodTol,
                                            long burn_in = kDefaultBurnIn);

}  // namespace horadyn::dynamics
