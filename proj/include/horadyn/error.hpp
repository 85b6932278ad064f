#pragma once

#include <stdexcept>
#include <string>

namespace horadyn {

enum class ErrorCode {
  InvalidArgument,
  NonRealRoots,
  SpecNotCanonical,
  IndexConstraintViolated,
  ZeroDenominator,
  ForbiddenInitialCondition,
  InitialAtMinusPhiPlus,
  Singularity,
  NearSingularity,
  WrongBranch,
  NotAnEquilibrium,
  OrbitTooShort,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type. `step` carries
// the offending index for ForbiddenInitialCondition / Singularity /
// NearSingularity and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long step = -1)
      : std::runtime_error(what), code_(code), step_(step) {}

  ErrorCode code() const noexcept { return code_; }
  long step() const noexcept { return step_; }

 private:
  ErrorCode code_;
  long step_;
};

}  // namespace horadyn
