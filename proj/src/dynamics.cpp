#include "horadyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "horadyn/error.hpp"

namespace horadyn::dynamics {

const char* to_string(Plane plane) noexcept { return plane == Plane::Exact ? "exact" : "float"; }

const char* to_string(OrbitStatus status) noexcept {
  switch (status) {
    case OrbitStatus::Completed: return "completed";
    case OrbitStatus::HitSingularity: return "singularity";
    case OrbitStatus::NearSingular: return "near-singular";
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

}  // namespace

Rational step(const EquationSpec& eq, const Rational& x) {
  Rational den = eq.signed_p() + pow(x, static_cast<unsigned long>(eq.nu));
  if (den == 0) throw Error(ErrorCode::Singularity, "denominator vanishes at x = " + horadyn::to_string(x));
  Rational next = eq.q / den;
  next.canonicalize();
  return next;
}

double step(const EquationSpec& eq, double x) {
  const double p = eq.p_real();
  const double den = eq.sign() * p + ipow(x, eq.nu);
  if (std::abs(den) < kNearSingularGuard * std::max(p, 1.0))
    throw Error(ErrorCode::NearSingularity, "denominator within guard of zero");
  return eq.q_real() / den;
}

Orbit iterate(const EquationSpec& eq, const Rational& x0, long steps, Plane plane) {
  validate(eq);
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be non-negative");
  if (plane == Plane::Floating) {
    Orbit orbit = iterate(eq, to_double(x0), steps);
    orbit.x0 = x0;
    return orbit;
  }
  Orbit orbit{eq, x0, Plane::Exact, {}, {}, OrbitStatus::Completed, -1};
  orbit.exact.reserve(static_cast<std::size_t>(steps + 1));
  orbit.exact.push_back(x0);
  for (long n = 1; n <= steps; ++n) {
    try {
      orbit.exact.push_back(step(eq, orbit.exact.back()));
    } catch (const Error&) {
      orbit.status = OrbitStatus::HitSingularity;
      orbit.status_step = n;
      break;
    }
  }
  orbit.values.reserve(orbit.exact.size());
  for (const auto& v : orbit.exact) orbit.values.push_back(to_double(v));
  return orbit;
}

Orbit iterate(const EquationSpec& eq, double x0, long steps) {
  validate(eq);
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be non-negative");
  Orbit orbit{eq, std::isfinite(x0) ? from_double(x0) : Rational(0), Plane::Floating, {}, {},
              OrbitStatus::Completed, -1};
  orbit.values.reserve(static_cast<std::size_t>(steps + 1));
  orbit.values.push_back(x0);
  for (long n = 1; n <= steps; ++n) {
    try {
      orbit.values.push_back(step(eq, orbit.values.back()));
    } catch (const Error&) {
      orbit.status = OrbitStatus::NearSingular;
      orbit.status_step = n;
      break;
    }
  }
  return orbit;
}

BoundsEnvelope bounds_envelope(const EquationSpec& eq) {
  validate(eq);
  if (eq.branch != Branch::Plus)
    throw Error(ErrorCode::WrongBranch, "bounds_envelope covers positive Plus orbits; use negative_envelope");
  const double p = eq.p_real();
  const double q = eq.q_real();
  return {q / (p + std::pow(q / p, eq.nu)), q / p};
}

BoundsEnvelope negative_envelope(const EquationSpec& eq) {
  validate(eq);
  if (eq.branch != Branch::Minus)
    throw Error(ErrorCode::WrongBranch, "negative_envelope covers negative Minus orbits; use bounds_envelope");
  const double p = eq.p_real();
  const double q = eq.q_real();
  if (eq.nu % 2 == 1) return {-q / p, -q / (p + std::pow(q / p, eq.nu))};
  return {-std::pow(p, 1.0 / eq.nu), -q / p};
}

OscillationProfile oscillation_profile(const Orbit& orbit, double center, double tol) {
  if (orbit.values.size() < 4)
    throw Error(ErrorCode::OrbitTooShort, "oscillation profile needs at least three completed steps");
  OscillationProfile out;
  out.sides.reserve(orbit.values.size());
  for (double v : orbit.values) {
    const double d = v - center;
    out.sides.push_back(std::abs(d) <= tol ? Side::At : (d > 0 ? Side::Above : Side::Below));
  }
  for (Side s : out.sides) {
    if (!out.semicycles.empty() && out.semicycles.back().first == s)
      ++out.semicycles.back().second;
    else
      out.semicycles.emplace_back(s, 1);
  }
  return out;
}

std::optional<DetectedPeriod> detect_period(const Orbit& orbit, long max_period, double tol, long burn_in) {
  if (max_period < 1) throw Error(ErrorCode::InvalidArgument, "max_period must be positive");
  if (burn_in < 0) throw Error(ErrorCode::InvalidArgument, "burn_in must be non-negative");
  const auto& v = orbit.values;
  const long len = static_cast<long>(v.size());
  if (len < 3 * max_period + burn_in)
    throw Error(ErrorCode::OrbitTooShort, "orbit has " + std::to_string(len) + " values, need " +
                                              std::to_string(3 * max_period + burn_in));
  auto matches = [&](long n, long period) {
    return std::abs(v[static_cast<std::size_t>(n + period)] - v[static_cast<std::size_t>(n)]) < tol;
  };
  for (long period = 1; period <= max_period; ++period) {
    bool ok = true;
    for (long n = burn_in; n + period < len && ok; ++n) ok = matches(n, period);
    if (!ok) continue;
    long phase = burn_in;
    while (phase > 0 && matches(phase - 1, period)) --phase;
    return DetectedPeriod{period, phase};
  }
  return std::nullopt;
}

}  // namespace horadyn::dynamics
