#include "horadyn/equation.hpp"

#include <utility>

#include "horadyn/error.hpp"

namespace horadyn {

const char* to_string(Branch branch) noexcept {
  return branch == Branch::Plus ? "plus" : "minus";
}

EquationSpec EquationSpec::make(Branch branch, Rational p, Rational q, int nu) {
  EquationSpec eq{branch, std::move(p), std::move(q), nu};
  validate(eq);
  return eq;
}

double EquationSpec::p_real() const { return to_double(p); }
double EquationSpec::q_real() const { return to_double(q); }

void validate(const EquationSpec& eq) {
  if (sign(eq.p) <= 0) throw Error(ErrorCode::InvalidArgument, "p must be positive, got " + to_string(eq.p));
  if (sign(eq.q) <= 0) throw Error(ErrorCode::InvalidArgument, "q must be positive, got " + to_string(eq.q));
  if (eq.nu < 1) throw Error(ErrorCode::InvalidArgument, "nu must be at least 1, got " + std::to_string(eq.nu));
}

void require_linear(const EquationSpec& eq) {
  validate(eq);
  if (eq.nu != 1)
    throw Error(ErrorCode::InvalidArgument,
                "closed-form solutions exist only for nu = 1, got nu = " + std::to_string(eq.nu));
}

std::string describe(const EquationSpec& eq) {
  return std::string(to_string(eq.branch)) + "(p=" + to_string(eq.p) + ", q=" + to_string(eq.q) +
         ", nu=" + std::to_string(eq.nu) + ")";
}

}  // namespace horadyn
