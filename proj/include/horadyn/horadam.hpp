#pragma once

// Horadam sequences W_n(a, b; p, q):  W_0 = a, W_1 = b,
// W_{n+1} = p W_n + q W_{n-1}, evaluated exactly over the rationals.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "horadyn/rational.hpp"

namespace horadyn::horadam {

struct HoradamSpec {
  Rational a{0};
  Rational b{1};
  Rational p{1};
  Rational q{1};

  /// (0, 1; p, q), the spec used by every identity and closed form.
  static HoradamSpec canonical(const Rational& p, const Rational& q);

  bool is_canonical() const { return a == 0 && b == 1; }
};

/// Throws InvalidArgument when p^2 + 4q == 0 (repeated characteristic root).
void validate(const HoradamSpec& spec);

/// W_n exactly. Negative indices follow the backward recurrence
/// W_{n-1} = (W_{n+1} - p W_n) / q, so the forward recurrence holds for every
/// integer n. Only for q = 1 does this reduce to W_{-n} = (-1)^{n+1} W_n.
Rational at(const HoradamSpec& spec, long n);

/// W_from, ..., W_to (inclusive) in one linear pass.
std::vector<Rational> range(const HoradamSpec& spec, long from, long to);

/// W_n(0, 1; -p, q) = (-1)^{n+1} W_n(0, 1; p, q), n >= 0. This is the
/// sign-alternated sequence that solves the minus-branch Riccati equation; it
/// coincides with at(canonical(p, q), -n) only when q = 1.
Rational reflected_at(const Rational& p, const Rational& q, long n);

/// Precomputed window [lo, hi] of one sequence.
class HoradamTable {
 public:
  HoradamTable(const HoradamSpec& spec, long lo, long hi);

  const Rational& operator[](long n) const;
  bool contains(long n) const { return n >= lo_ && n <= hi_; }
  const HoradamSpec& spec() const { return spec_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }

 private:
  HoradamSpec spec_;
  long lo_;
  long hi_;
  std::vector<Rational> values_;
};

struct QuadraticRoots {
  double phi_plus;
  double phi_minus;
  double discriminant;  // p^2 + 4q
  double A;             // b - a * phi_minus
  double B;             // b - a * phi_plus
};

/// Roots of x^2 = p x + q and the Binet coefficients for (a, b).
/// Throws NonRealRoots unless p^2 + 4q > 0.
QuadraticRoots binet_roots(double p, double q, double a = 0.0, double b = 1.0);

/// (A phi_+^n - B phi_-^n) / (phi_+ - phi_-), floating point.
double binet_value(const QuadraticRoots& roots, long n);

/// u + v * phi in Q[phi] with phi^2 = p phi + q.
class QuadraticElement {
 public:
  QuadraticElement(Rational u, Rational v, Rational p, Rational q);

  static QuadraticElement one(const Rational& p, const Rational& q);
  static QuadraticElement phi(const Rational& p, const Rational& q);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  QuadraticElement operator*(const QuadraticElement& rhs) const;
  QuadraticElement operator-(const QuadraticElement& rhs) const;
  bool operator==(const QuadraticElement& rhs) const;

  /// Numeric value with phi replaced by phi_plus or phi_minus.
  double evaluate(bool plus_root) const;

  std::string str() const;

 private:
  void require_same_ring(const QuadraticElement& rhs) const;

  Rational u_;
  Rational v_;
  Rational p_;
  Rational q_;
};

/// phi^n by repeated multiplication in Q[phi], n >= 1. The result is
/// q W_{n-1} + W_n phi for the canonical sequence.
QuadraticElement phi_power(const Rational& p, const Rational& q, unsigned long n);

enum class Identity { Convolution, Cassini, DOcagne, Johnson, PhiPower };

const char* to_string(Identity kind) noexcept;

/// LHS - RHS of an identity; `phi_part` is only used by PhiPower, where the
/// residual is an element of Q[phi].
struct IdentityResidual {
  Rational value{0};
  Rational phi_part{0};

  bool is_zero() const { return value == 0 && phi_part == 0; }
};

/// Index tuples:
///   Convolution (n, k):            n > k + 1, k >= 0
///       W_n = W_{k+1} W_{n-k} + q W_k W_{n-k-1}
///   Cassini     (n):               n > 0
///       W_{n-1} W_{n+1} - W_n^2 = -(-q)^{n-1}
///   DOcagne     (n, r):            n, r >= 1
///       W_{n+r} W_{n+1} - W_{n+r+1} W_n = (-1)^n q^n W_r
///   Johnson     (k, l, m, n, r):   k + l = m + n (any integers)
///       W_k W_l - W_m W_n = (-q)^r (W_{k-r} W_{l-r} - W_{m-r} W_{n-r})
///   PhiPower    (n):               n > 0
///       phi^n = W_n phi + q W_{n-1}
/// Throws SpecNotCanonical for (a, b) != (0, 1) and IndexConstraintViolated
/// for a bad tuple (including a wrong tuple length).
IdentityResidual check_identity(Identity kind, const HoradamSpec& spec, std::span<const long> indices);

/// Same check against a precomputed table; the table must cover every index
/// the identity touches.
IdentityResidual check_identity(Identity kind, const HoradamTable& table, std::span<const long> indices);

/// W_{n+r} / W_n as a double; tends to phi_plus^r. Throws ZeroDenominator when
/// W_n = 0.
double ratio_estimate(const HoradamSpec& spec, long r, long n);

struct IdentitySuiteEntry {
  Identity kind;
  long checked = 0;
  long failed = 0;
  std::vector<long> first_failure;  // empty when every check passed
};

/// Exhaustive check of all five identities for every admissible tuple with
/// indices in [0, nmax]. Kinds run concurrently; entries come back in enum
/// order.
std::array<IdentitySuiteEntry, 5> run_identity_suite(const Rational& p, const Rational& q, long nmax);

}  // namespace horadyn::horadam
