#pragma once

// Exact theory of the nu = 1 equations x' = q/(p + x) and y' = q/(-p + y):
// closed-form solutions in Horadam numbers, forbidden initial values, fixed
// solutions and limits, and the product-of-iterates theorems.

#include <optional>
#include <vector>

#include "horadyn/equation.hpp"
#include "horadyn/rational.hpp"

namespace horadyn::closed_form {

inline constexpr long kDefaultForbiddenDepth = 64;

/// x_n from the Horadam closed form (Plus: W_n(0,1;p,q); Minus: the
/// sign-alternated W_n(0,1;-p,q)). Throws ForbiddenInitialCondition(m) when
/// the denominator vanishes at some step m <= n.
Rational solve(const EquationSpec& eq, const Rational& x0, long n);

/// x_0 .. x_n from the closed form, same error behaviour as solve().
std::vector<Rational> solve_series(const EquationSpec& eq, const Rational& x0, long n);

struct ForbiddenPoint {
  long depth;      // the orbit is undefined at exactly this step
  Rational value;  // -W_{m+1}/W_m (Plus) or +W_{m+1}/W_m (Minus)
};

std::vector<ForbiddenPoint> forbidden_points(const EquationSpec& eq, long depth);

/// First step m <= depth at which the orbit of x0 is undefined, or nullopt
/// when x0 is clear to that depth. Membership beyond `depth` is undecided.
std::optional<long> forbidden_depth(const EquationSpec& eq, const Rational& x0,
                                    long depth = kDefaultForbiddenDepth);

/// Floating-plane test for the irrational exclusions of the solution sets:
/// {1/phi_+, 1/phi_-} on the Plus branch, {phi_+, phi_-} on the Minus branch.
bool at_excluded_point(const EquationSpec& eq, double x0, double tol = 1e-12);

enum class Root { PhiPlus, PhiMinus };

struct FixedSolution {
  double initial;         // starting value of the constant orbit
  double constant_value;  // value of every iterate
  double stated_initial;  // 1/phi (Plus) or phi (Minus); equals `initial` when q = 1 or on Minus
};

/// The constant orbit attached to phi_+ or phi_-: Plus gives q/phi, Minus
/// gives phi.
FixedSolution fixed_solution(const EquationSpec& eq, Root which);

/// -phi_- on the Plus branch, phi_- on the Minus branch.
double asymptotic_limit(const EquationSpec& eq);

/// x_n + y_n with y_0 = -x_0, both from the closed form. Zero exactly.
Rational conjugate_orbit_check(const Rational& p, const Rational& q, const Rational& x0, long n);

enum class ProductRegime { PGreaterQm1, PEqualQm1, PLessQm1 };

const char* to_string(ProductRegime regime) noexcept;

/// Behaviour of the running products P_n = x_0 x_1 ... x_n.
struct ProductAnalysis {
  ProductRegime regime;
  /// 0 when p > q - 1; L = x0' sqrt(p^2+4q) / (phi_+ + x0') when p = q - 1
  /// (x0' = x0 on Plus, -y0 on Minus); absent when the products diverge.
  std::optional<double> predicted_limit;
  /// Minus branch with p = q - 1: the products split by parity of n.
  bool alternating = false;
  std::optional<double> even_limit;
  std::optional<double> odd_limit;
  /// Regime p < q - 1: |P_n| has a strictly increasing running maximum over
  /// every n after the burn-in.
  bool divergence_certified = false;
  long burn_in = 0;
  std::vector<Rational> partials_exact;  // P_0 .. P_steps
  std::vector<double> partials;
};

/// Throws ForbiddenInitialCondition if the orbit is undefined within `steps`
/// and InitialAtMinusPhiPlus when the limit formula's denominator vanishes.
ProductAnalysis product_analysis(const EquationSpec& eq, const Rational& x0, long steps);

/// q^n x0 / (W_{n+1} + x0 W_n): the telescoped value of P_n (Minus uses the
/// sign-alternated sequence).
Rational product_closed_form(const EquationSpec& eq, const Rational& x0, long n);

struct Reconstruction {
  Rational product;  // x_1 ... x_{n-k-1}
  Rational value;    // q^{n-k-1} W_{k+1} / product, equal to W_n
};

/// Recovers W_n from the Plus orbit of x0 = q W_k / W_{k+1}; needs n > k+1.
Reconstruction reconstruct_horadam(const Rational& p, const Rational& q, long k, long n);

/// (-1)^n x_1 ... x_n for x0 = -W_{n+r+1}/W_{n+r}; equals W_{n+r}/W_r.
Rational docagne_product(const Rational& p, const Rational& q, long n, long r);

struct JohnsonProduct {
  /// (-1)^{r+1} q^{r-n} x_1 ... x_n, equal to W_r / W_{n-r}.
  Rational value;
  /// x0 = -W_{r+1}/W_r is itself forbidden at depth r, so for n > r the
  /// orbit passes through the pole: x_r is infinite, x_{r+1} = 0, and the pair
  /// contributes its limit x_r x_{r+1} -> q. Set to r whenever that happens.
  std::optional<long> pole_step;
};

/// Needs 1 <= r < n.
JohnsonProduct johnson_product(const Rational& p, const Rational& q, long r, long n);

}  // namespace horadyn::closed_form
