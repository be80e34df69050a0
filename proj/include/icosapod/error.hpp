#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icosapod {

enum class ErrorCode {
  NonOrthogonalInput,
  BoundaryPoint,
  NotOnS,
  RankMismatch,
  LegAtInfinity,
  ComplexLeg,
  DegenerateBasis,
  NonUniqueLift,
  PathFailure,
  PositiveDimensional,
  DegenerateSpace,
  DegeneratePoses,
  MissingE,
  MissingPe,
  NoBoundaryRank3Point,
  ResampleSeedLine,
  RankDeficientStart,
  CorrectorDivergence,
  TooShort,
  Schema,
  IO,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace icosapod
