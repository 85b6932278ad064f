#include "horadyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "horadyn/error.hpp"

namespace horadyn::analysis {

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::LocallyAsymptoticallyStable: return "locally-asymptotically-stable";
    case Stability::MarginallyStable: return "marginally-stable";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

const char* to_string(Bracket b) noexcept {
  switch (b) {
    case Bracket::InUnitInterval: return "(0,1)";
    case Bracket::AtOne: return "1";
    case Bracket::BeyondOne: return "(1,inf)";
    case Bracket::InMinusUnit: return "(-1,0)";
    case Bracket::AtMinusOne: return "-1";
    case Bracket::BelowMinusOne: return "(-inf,-1)";
  }
  return "unknown";
}

namespace {

double ipow(double x, int n) {
  double result = 1.0;
  double base = x;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    base *= base;
  }
  return result;
}

// Root of f in [lo, hi] given opposite signs at the ends, refined until the
// midpoint no longer splits the bracket.
template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 2200; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

Bracket locate(double x) {
  if (x > 0) return x < 1 ? Bracket::InUnitInterval : (x == 1 ? Bracket::AtOne : Bracket::BeyondOne);
  return x > -1 ? Bracket::InMinusUnit : (x == -1 ? Bracket::AtMinusOne : Bracket::BelowMinusOne);
}

Bracket by_trichotomy(int cmp, bool negative) {
  if (!negative) return cmp < 0 ? Bracket::InUnitInterval : (cmp == 0 ? Bracket::AtOne : Bracket::BeyondOne);
  return cmp < 0 ? Bracket::InMinusUnit : (cmp == 0 ? Bracket::AtMinusOne : Bracket::BelowMinusOne);
}

double map(const EquationSpec& eq, double x) { return eq.q_real() / (eq.sign() * eq.p_real() + ipow(x, eq.nu)); }

// S_k(a, b) = sum_{i<k} a^i b^{k-1-i}
double geometric_sum(double a, double b, int k) {
  double sum = 0.0;
  double a_pow = 1.0;
  for (int i = 0; i < k; ++i) {
    sum = sum * b + a_pow;
    a_pow *= a;
  }
  return sum;
}

}  // namespace

double equilibrium_residual(const EquationSpec& eq, double x) {
  return ipow(x, eq.nu + 1) + eq.sign() * eq.p_real() * x - eq.q_real();
}

double multiplier(const EquationSpec& eq, double x) {
  const double den = eq.sign() * eq.p_real() + ipow(x, eq.nu);
  return -eq.q_real() * eq.nu * ipow(x, eq.nu - 1) / (den * den);
}

EquilibriumReport classify_stability(const EquationSpec& eq, EquilibriumReport report) {
  validate(eq);
  const double tol = 1e-10 * std::max(1.0, eq.q_real());
  if (!(std::abs(equilibrium_residual(eq, report.value)) < tol))
    throw Error(ErrorCode::NotAnEquilibrium, "value is not an equilibrium of " + describe(eq));
  report.multiplier = multiplier(eq, report.value);
  const double m = std::abs(report.multiplier);
  if (m < 1.0 - 1e-12)
    report.classification = Stability::LocallyAsymptoticallyStable;
  else if (m > 1.0 + 1e-12)
    report.classification = Stability::Unstable;
  else
    report.classification = Stability::MarginallyStable;
  return report;
}

std::vector<EquilibriumReport> equilibria(const EquationSpec& eq) {
  validate(eq);
  const double p = eq.p_real();
  const double q = eq.q_real();
  const int nu = eq.nu;
  auto poly = [&](double x) { return equilibrium_residual(eq, x); };
  std::vector<EquilibriumReport> out;
  auto emit = [&](double value, Bracket bracket) {
    EquilibriumReport r;
    r.value = value;
    r.bracket = bracket;
    out.push_back(classify_stability(eq, r));
  };

  if (eq.branch == Branch::Plus) {
    const int cmp = sgn(Rational(eq.q - (eq.p + 1)));
    double value;
    if (cmp == 0)
      value = 1.0;
    else if (nu == 1)
      value = 2.0 * q / (p + std::sqrt(p * p + 4.0 * q));
    else
      value = bisect(poly, 0.0, std::max(1.0, q / p) + 1.0);
    emit(value, by_trichotomy(cmp, false));
    return out;
  }

  if (nu % 2 == 1) {
    // G(y) = y^{nu+1} - p y - q decreases strictly on y < 0.
    const int cmp = sgn(Rational(eq.q - (eq.p + 1)));
    double value;
    if (cmp == 0)
      value = -1.0;
    else if (nu == 1)
      value = -2.0 * q / (p + std::sqrt(p * p + 4.0 * q));
    else
      value = bisect(poly, -(1.0 + q), 0.0);
    emit(value, by_trichotomy(cmp, true));
    return out;
  }

  // Even nu: G is concave on y < 0 with its maximum at y* = -t*,
  // t* = (p/(nu+1))^{1/nu}, where G(y*) = t* p nu/(nu+1) - q.
  const double t_star = std::pow(p / (nu + 1), 1.0 / nu);
  const double y_star = -t_star;
  const double g_max = t_star * p * nu / (nu + 1) - q;
  const double far = -(std::max(1.0, p) + 1.0);

  if (eq.q == eq.p - 1) {
    if (eq.p == nu + 1) {
      emit(-1.0, Bracket::AtMinusOne);  // double root
      return out;
    }
    std::vector<double> roots{-1.0};
    roots.push_back(t_star < 1.0 ? bisect(poly, y_star, 0.0) : bisect(poly, far, y_star));
    std::sort(roots.begin(), roots.end(), std::greater<>());
    for (double r : roots) emit(r, locate(r));
    return out;
  }
  if (std::abs(g_max) <= 1e-14 * std::max(1.0, q)) {
    emit(y_star, locate(y_star));
    return out;
  }
  if (g_max < 0) return out;
  const double inner = bisect(poly, y_star, 0.0);
  const double outer = bisect(poly, far, y_star);
  emit(inner, locate(inner));
  emit(outer, locate(outer));
  return out;
}

bool theorem_a_check(std::span<const double> coeffs) {
  double sum = 0.0;
  for (double c : coeffs) sum += std::abs(c);
  return sum < 1.0;
}

std::pair<double, double> approx_period_two_form(const EquationSpec& eq) {
  validate(eq);
  const double p = eq.p_real();
  const double q = eq.q_real();
  const double lift = std::pow(q / p, eq.nu);
  if (eq.branch == Branch::Plus) return {q / p, q / (p + lift)};
  if (eq.nu % 2 == 1) return {-q / p, -q / (p + lift)};
  return {-q / p, q / (-p + lift)};
}

std::optional<PeriodTwoCycle> solve_period_two(const EquationSpec& eq, double tol) {
  validate(eq);
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (eq.nu == 1) return std::nullopt;  // h(x) = +-p never vanishes

  const double p = eq.p_real();
  const double q = eq.q_real();
  const int nu = eq.nu;
  const double s = eq.sign();
  auto f = [&](double x) { return map(eq, x); };
  auto h = [&](double x) {
    const double fx = f(x);
    return s * p - x * fx * geometric_sum(x, fx, nu - 1);
  };

  double lo;
  double hi;
  if (eq.branch == Branch::Plus) {
    lo = 0.0;
    hi = 1.001 * q / p;
  } else if (nu % 2 == 1) {
    lo = -1.001 * q / p;
    hi = 0.0;
  } else {
    lo = -(2.0 * std::max(q / p, std::pow(p, 1.0 / nu)) + 1.0);
    hi = 0.0;
  }

  const auto approx = approx_period_two_form(eq);
  const double accept = 1e-8 * std::max(1.0, q);
  std::optional<PeriodTwoCycle> best;
  double best_distance = std::numeric_limits<double>::infinity();

  constexpr int kIntervals = 20000;
  const double width = (hi - lo) / kIntervals;
  double x_prev = lo;
  double h_prev = h(lo);
  for (int i = 1; i <= kIntervals; ++i) {
    const double x = (i == kIntervals) ? hi : lo + width * i;
    const double hx = h(x);
    if (std::isfinite(h_prev) && std::isfinite(hx) && (h_prev < 0) != (hx < 0) && h_prev != 0) {
      double a = x_prev;
      double b = x;
      // Coarse phase to the requested tolerance, then to machine precision.
      double fa = h(a);
      while (b - a > tol) {
        const double m = a + (b - a) / 2;
        const double fm = h(m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      const double root = bisect(h, a, b);
      const double image = f(root);
      const double r1 = std::abs(root * (s * p + ipow(image, nu)) - q);
      const double r2 = std::abs(image * (s * p + ipow(root, nu)) - q);
      const double residual = std::max(r1, r2);
      if (std::isfinite(residual) && residual < accept && std::abs(root - image) > 1e-8) {
        double phi = root;
        double psi = image;
        if (std::abs(psi - approx.first) < std::abs(phi - approx.first)) std::swap(phi, psi);
        const double distance = std::abs(phi - approx.first) + std::abs(psi - approx.second);
        if (distance < best_distance) {
          best_distance = distance;
          best = PeriodTwoCycle{phi, psi, residual, approx};
        }
      }
    }
    x_prev = x;
    h_prev = hx;
  }
  return best;
}

std::optional<int> minus_even_cycle_threshold(const Rational& p, const Rational& q, int cap) {
  const double qd = to_double(q);
  int nu = static_cast<int>(std::floor(qd)) + 1;
  if (nu % 2 != 0) ++nu;
  for (; nu <= cap; nu += 2) {
    const auto eq = EquationSpec::make(Branch::Minus, p, q, nu);
    if (solve_period_two(eq)) return nu;
  }
  return std::nullopt;
}

}  // namespace horadyn::analysis
