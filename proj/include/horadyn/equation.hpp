#pragma once

#include <string>

#include "horadyn/rational.hpp"

namespace horadyn {

/// Sign of p in the denominator: Plus is x' = q/(p + x^nu), Minus is
/// y' = q/(-p + y^nu).
enum class Branch { Plus, Minus };

const char* to_string(Branch branch) noexcept;

/// One member of the family x_{n+1} = q / (+-p + x_n^nu), p, q > 0, nu >= 1.
struct EquationSpec {
  Branch branch = Branch::Plus;
  Rational p{1};
  Rational q{1};
  int nu = 1;

  /// Validating constructor; throws InvalidArgument unless p > 0, q > 0,
  /// nu >= 1.
  static EquationSpec make(Branch branch, Rational p, Rational q, int nu = 1);

  /// +1 on the Plus branch, -1 on the Minus branch.
  int sign() const noexcept { return branch == Branch::Plus ? 1 : -1; }
  /// The signed denominator offset +-p.
  Rational signed_p() const { return branch == Branch::Plus ? p : Rational(-p); }

  double p_real() const;
  double q_real() const;
};

/// Throws InvalidArgument when the spec violates p > 0, q > 0, nu >= 1.
void validate(const EquationSpec& eq);

/// Throws InvalidArgument unless nu == 1 (closed-form machinery).
void require_linear(const EquationSpec& eq);

std::string describe(const EquationSpec& eq);

}  // namespace horadyn
