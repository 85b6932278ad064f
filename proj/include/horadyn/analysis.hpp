#pragma once

// Equilibria, linearised stability and period-two cycles of
// x' = q/(+-p + x^nu).

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "horadyn/equation.hpp"

namespace horadyn::analysis {

enum class Stability { LocallyAsymptoticallyStable, MarginallyStable, Unstable };

enum class Bracket { InUnitInterval, AtOne, BeyondOne, InMinusUnit, AtMinusOne, BelowMinusOne };

const char* to_string(Stability s) noexcept;
const char* to_string(Bracket b) noexcept;

struct EquilibriumReport {
  double value = 0.0;
  double multiplier = 0.0;  // f'(value)
  Stability classification = Stability::MarginallyStable;
  Bracket bracket = Bracket::InUnitInterval;
};

/// x^{nu+1} + s p x - q with s = +1 (Plus) or -1 (Minus); zero exactly at an
/// equilibrium.
double equilibrium_residual(const EquationSpec& eq, double x);

/// f'(x) = -q nu x^{nu-1} / (+-p + x^nu)^2.
double multiplier(const EquationSpec& eq, double x);

/// Plus: the unique positive equilibrium.
/// Minus: the negative equilibria (odd nu: exactly one; even nu: zero, one or
/// two, located by the maximum of -G on the negative axis). Positive
/// equilibria of the Minus branch are not reported.
/// Every report is classified.
std::vector<EquilibriumReport> equilibria(const EquationSpec& eq);

/// Fills multiplier and classification. |f'| < 1 - 1e-12 is stable,
/// > 1 + 1e-12 unstable, otherwise marginal. Throws NotAnEquilibrium when
/// report.value misses its polynomial by 1e-10 * max(1, q) or more.
EquilibriumReport classify_stability(const EquationSpec& eq, EquilibriumReport report);

/// Sufficient condition for asymptotic stability of a linear recurrence:
/// sum |c_i| < 1.
bool theorem_a_check(std::span<const double> coeffs);

struct PeriodTwoCycle {
  double phi = 0.0;
  double psi = 0.0;
  /// max(|phi(+-p + psi^nu) - q|, |psi(+-p + phi^nu) - q|)
  double residual = 0.0;
  /// Large-nu approximation of the cycle (see approx_period_two_form).
  std::pair<double, double> approx_form;
};

/// Plus: (q/p, q/(p + (q/p)^nu)); Minus odd nu: the negation;
/// Minus even nu: (-q/p, q/(-p + (q/p)^nu)).
std::pair<double, double> approx_period_two_form(const EquationSpec& eq);

/// Finds a prime two-cycle by bracketing sign changes of the deflated
/// second-iterate equation
///   h(x) = s p - x f(x) S_{nu-1}(x, f(x)),  S_k(a,b) = (a^k - b^k)/(a - b),
/// which vanishes exactly at two-cycle points (f(f(x)) = x with f(x) != x),
/// refining each bracket by bisection below `tol` and then to machine
/// precision. Roots within 1e-8 of an equilibrium are discarded. phi is the
/// cycle point nearer approx_form.first.
std::optional<PeriodTwoCycle> solve_period_two(const EquationSpec& eq, double tol = 1e-10);

/// Minus branch, even nu: smallest even nu > q (searching up to `cap`) for
/// which solve_period_two finds a cycle.
std::optional<int> minus_even_cycle_threshold(const Rational& p, const Rational& q, int cap = 64);

}  // namespace horadyn::analysis
