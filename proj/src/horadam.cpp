#include "horadyn/horadam.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <utility>

#include "horadyn/error.hpp"

namespace horadyn::horadam {

HoradamSpec HoradamSpec::canonical(const Rational& p, const Rational& q) {
  return HoradamSpec{Rational(0), Rational(1), p, q};
}

void validate(const HoradamSpec& spec) {
  if (spec.p * spec.p + 4 * spec.q == 0)
    throw Error(ErrorCode::InvalidArgument, "p^2 + 4q must be nonzero (distinct characteristic roots)");
}

Rational at(const HoradamSpec& spec, long n) {
  validate(spec);
  if (n == 0) return spec.a;
  if (n == 1) return spec.b;
  if (n > 1) {
    Rational prev = spec.a;
    Rational cur = spec.b;
    for (long i = 1; i < n; ++i) {
      Rational next = spec.p * cur + spec.q * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  if (spec.q == 0) throw Error(ErrorCode::ZeroDenominator, "negative indices need q != 0");
  // Walk down: W_{i-1} = (W_{i+1} - p W_i) / q.
  Rational hi = spec.b;
  Rational lo = spec.a;
  for (long i = 0; i > n; --i) {
    Rational below = (hi - spec.p * lo) / spec.q;
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

std::vector<Rational> range(const HoradamSpec& spec, long from, long to) {
  if (to < from) return {};
  validate(spec);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  // Seed with W_from and W_{from+1}, then run forward.
  Rational w0 = at(spec, from);
  Rational w1 = at(spec, from + 1);
  out.push_back(w0);
  for (long n = from + 1; n <= to; ++n) {
    out.push_back(w1);
    Rational next = spec.p * w1 + spec.q * w0;
    w0 = std::move(w1);
    w1 = std::move(next);
  }
  return out;
}

Rational reflected_at(const Rational& p, const Rational& q, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "reflected sequence is defined for n >= 0");
  return at(HoradamSpec::canonical(Rational(-p), q), n);
}

HoradamTable::HoradamTable(const HoradamSpec& spec, long lo, long hi)
    : spec_(spec), lo_(lo), hi_(hi), values_(range(spec, lo, hi)) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty Horadam table window");
}

const Rational& HoradamTable::operator[](long n) const {
  if (!contains(n))
    throw Error(ErrorCode::IndexConstraintViolated,
                "index " + std::to_string(n) + " outside table window [" + std::to_string(lo_) + ", " +
                    std::to_string(hi_) + "]");
  return values_[static_cast<std::size_t>(n - lo_)];
}

QuadraticRoots binet_roots(double p, double q, double a, double b) {
  const double disc = p * p + 4.0 * q;
  if (!(disc > 0.0)) throw Error(ErrorCode::NonRealRoots, "p^2 + 4q must be positive for real distinct roots");
  const double s = std::sqrt(disc);
  // Avoid cancellation in the smaller-magnitude root: phi_+ phi_- = -q.
  double phi_plus;
  double phi_minus;
  if (p >= 0) {
    phi_plus = (p + s) / 2.0;
    phi_minus = -q / phi_plus;
  } else {
    phi_minus = (p - s) / 2.0;
    phi_plus = -q / phi_minus;
  }
  return QuadraticRoots{phi_plus, phi_minus, disc, b - a * phi_minus, b - a * phi_plus};
}

double binet_value(const QuadraticRoots& r, long n) {
  const double nn = static_cast<double>(n);
  return (r.A * std::pow(r.phi_plus, nn) - r.B * std::pow(r.phi_minus, nn)) / std::sqrt(r.discriminant);
}

QuadraticElement::QuadraticElement(Rational u, Rational v, Rational p, Rational q)
    : u_(std::move(u)), v_(std::move(v)), p_(std::move(p)), q_(std::move(q)) {}

QuadraticElement QuadraticElement::one(const Rational& p, const Rational& q) {
  return QuadraticElement(Rational(1), Rational(0), p, q);
}

QuadraticElement QuadraticElement::phi(const Rational& p, const Rational& q) {
  return QuadraticElement(Rational(0), Rational(1), p, q);
}

void QuadraticElement::require_same_ring(const QuadraticElement& rhs) const {
  if (p_ != rhs.p_ || q_ != rhs.q_)
    throw Error(ErrorCode::InvalidArgument, "quadratic elements from different rings");
}

QuadraticElement QuadraticElement::operator*(const QuadraticElement& rhs) const {
  require_same_ring(rhs);
  // (u1 + v1 phi)(u2 + v2 phi) with phi^2 = p phi + q.
  const Rational vv = v_ * rhs.v_;
  Rational u = u_ * rhs.u_ + q_ * vv;
  Rational v = u_ * rhs.v_ + rhs.u_ * v_ + p_ * vv;
  return QuadraticElement(std::move(u), std::move(v), p_, q_);
}

QuadraticElement QuadraticElement::operator-(const QuadraticElement& rhs) const {
  require_same_ring(rhs);
  return QuadraticElement(u_ - rhs.u_, v_ - rhs.v_, p_, q_);
}

bool QuadraticElement::operator==(const QuadraticElement& rhs) const {
  return u_ == rhs.u_ && v_ == rhs.v_ && p_ == rhs.p_ && q_ == rhs.q_;
}

double QuadraticElement::evaluate(bool plus_root) const {
  const auto roots = binet_roots(to_double(p_), to_double(q_));
  return to_double(u_) + to_double(v_) * (plus_root ? roots.phi_plus : roots.phi_minus);
}

std::string QuadraticElement::str() const { return horadyn::to_string(u_) + " + " + horadyn::to_string(v_) + "*phi"; }

QuadraticElement phi_power(const Rational& p, const Rational& q, unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "phi_power needs n >= 1");
  const auto phi = QuadraticElement::phi(p, q);
  QuadraticElement acc = phi;
  for (unsigned long i = 1; i < n; ++i) acc = acc * phi;
  return acc;
}

const char* to_string(Identity kind) noexcept {
  switch (kind) {
    case Identity::Convolution: return "convolution";
    case Identity::Cassini: return "cassini";
    case Identity::DOcagne: return "docagne";
    case Identity::Johnson: return "johnson";
    case Identity::PhiPower: return "phi-power";
  }
  return "unknown";
}

namespace {

std::size_t arity(Identity kind) {
  switch (kind) {
    case Identity::Convolution: return 2;
    case Identity::Cassini: return 1;
    case Identity::DOcagne: return 2;
    case Identity::Johnson: return 5;
    case Identity::PhiPower: return 1;
  }
  return 0;
}

[[noreturn]] void violated(Identity kind, const std::string& why) {
  throw Error(ErrorCode::IndexConstraintViolated, std::string(to_string(kind)) + ": " + why);
}

void check_indices(Identity kind, std::span<const long> idx) {
  if (idx.size() != arity(kind))
    violated(kind, "expected " + std::to_string(arity(kind)) + " indices, got " + std::to_string(idx.size()));
  switch (kind) {
    case Identity::Convolution:
      if (idx[1] < 0 || idx[0] <= idx[1] + 1) violated(kind, "need n > k + 1 and k >= 0");
      break;
    case Identity::Cassini:
    case Identity::PhiPower:
      if (idx[0] <= 0) violated(kind, "need n > 0");
      break;
    case Identity::DOcagne:
      if (idx[0] < 1 || idx[1] < 1) violated(kind, "need n, r >= 1");
      break;
    case Identity::Johnson:
      if (idx[0] + idx[1] != idx[2] + idx[3]) violated(kind, "need k + l = m + n");
      break;
  }
}

// Smallest window covering every index touched by the identity.
std::pair<long, long> window(Identity kind, std::span<const long> idx) {
  switch (kind) {
    case Identity::Convolution: return {0, idx[0]};
    case Identity::Cassini:
    case Identity::PhiPower: return {idx[0] - 1, idx[0] + 1};
    case Identity::DOcagne: return {0, idx[0] + idx[1] + 1};
    case Identity::Johnson: {
      const long r = idx[4];
      long lo = 0;
      long hi = 1;
      for (int i = 0; i < 4; ++i) {
        lo = std::min({lo, idx[i], idx[i] - r});
        hi = std::max({hi, idx[i], idx[i] - r});
      }
      return {lo, hi};
    }
  }
  return {0, 1};
}

}  // namespace

IdentityResidual check_identity(Identity kind, const HoradamTable& w, std::span<const long> idx) {
  if (!w.spec().is_canonical())
    throw Error(ErrorCode::SpecNotCanonical, "identities hold for the (0, 1) initial values only");
  check_indices(kind, idx);
  const Rational& p = w.spec().p;
  const Rational& q = w.spec().q;
  IdentityResidual res;
  switch (kind) {
    case Identity::Convolution: {
      const long n = idx[0];
      const long k = idx[1];
      res.value = w[n] - (w[k + 1] * w[n - k] + q * w[k] * w[n - k - 1]);
      break;
    }
    case Identity::Cassini: {
      const long n = idx[0];
      res.value = w[n - 1] * w[n + 1] - w[n] * w[n] + pow(Rational(-q), n - 1);
      break;
    }
    case Identity::DOcagne: {
      const long n = idx[0];
      const long r = idx[1];
      const Rational sgn = (n % 2 == 0) ? Rational(1) : Rational(-1);
      res.value = w[n + r] * w[n + 1] - w[n + r + 1] * w[n] - sgn * pow(q, n) * w[r];
      break;
    }
    case Identity::Johnson: {
      const long k = idx[0], l = idx[1], m = idx[2], n = idx[3], r = idx[4];
      res.value = w[k] * w[l] - w[m] * w[n] -
                  pow(Rational(-q), r) * (w[k - r] * w[l - r] - w[m - r] * w[n - r]);
      break;
    }
    case Identity::PhiPower: {
      const long n = idx[0];
      const auto lhs = phi_power(p, q, static_cast<unsigned long>(n));
      res.value = lhs.u() - q * w[n - 1];
      res.phi_part = lhs.v() - w[n];
      break;
    }
  }
  res.value.canonicalize();
  res.phi_part.canonicalize();
  return res;
}

IdentityResidual check_identity(Identity kind, const HoradamSpec& spec, std::span<const long> idx) {
  if (!spec.is_canonical())
    throw Error(ErrorCode::SpecNotCanonical, "identities hold for the (0, 1) initial values only");
  check_indices(kind, idx);
  const auto [lo, hi] = window(kind, idx);
  return check_identity(kind, HoradamTable(spec, lo, hi), idx);
}

double ratio_estimate(const HoradamSpec& spec, long r, long n) {
  const Rational den = at(spec, n);
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "W_" + std::to_string(n) + " is zero");
  if (r == 0) return 1.0;
  Rational ratio = at(spec, n + r) / den;
  ratio.canonicalize();
  return to_double(ratio);
}

namespace {

IdentitySuiteEntry run_kind(Identity kind, const HoradamTable& table, long nmax) {
  IdentitySuiteEntry entry{kind, 0, 0, {}};
  auto run = [&](std::vector<long> idx) {
    ++entry.checked;
    if (!check_identity(kind, table, idx).is_zero()) {
      if (entry.failed == 0) entry.first_failure = idx;
      ++entry.failed;
    }
  };
  switch (kind) {
    case Identity::Convolution:
      for (long n = 2; n <= nmax; ++n)
        for (long k = 0; k + 1 < n; ++k) run({n, k});
      break;
    case Identity::Cassini:
    case Identity::PhiPower:
      for (long n = 1; n <= nmax; ++n) run({n});
      break;
    case Identity::DOcagne:
      for (long n = 1; n <= nmax; ++n)
        for (long r = 1; n + r <= nmax; ++r) run({n, r});
      break;
    case Identity::Johnson:
      for (long k = 0; k <= nmax; ++k)
        for (long l = 0; l <= nmax; ++l)
          for (long m = 0; m <= nmax; ++m) {
            const long n = k + l - m;
            if (n < 0 || n > nmax) continue;
            const long rmax = std::min({k, l, m, n});
            for (long r = 0; r <= rmax; ++r) run({k, l, m, n, r});
          }
      break;
  }
  return entry;
}

}  // namespace

std::array<IdentitySuiteEntry, 5> run_identity_suite(const Rational& p, const Rational& q, long nmax) {
  if (nmax < 2) throw Error(ErrorCode::InvalidArgument, "identity suite needs nmax >= 2");
  const HoradamTable table(HoradamSpec::canonical(p, q), 0, 2 * nmax + 2);
  constexpr std::array kinds{Identity::Convolution, Identity::Cassini, Identity::DOcagne, Identity::Johnson,
                             Identity::PhiPower};
  std::array<std::future<IdentitySuiteEntry>, 5> pending;
  for (std::size_t i = 0; i < kinds.size(); ++i)
    pending[i] = std::async(std::launch::async, run_kind, kinds[i], std::cref(table), nmax);
  std::array<IdentitySuiteEntry, 5> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) out[i] = pending[i].get();
  return out;
}

}  // namespace horadyn::horadam
