#include "icosapod/error.hpp"

namespace icosapod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOrthogonalInput: return "NonOrthogonalInput";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::NotOnS: return "NotOnS";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::LegAtInfinity: return "LegAtInfinity";
    case ErrorCode::ComplexLeg: return "ComplexLeg";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::NonUniqueLift: return "NonUniqueLift";
    case ErrorCode::PathFailure: return "PathFailure";
    case ErrorCode::PositiveDimensional: return "PositiveDimensional";
    case ErrorCode::DegenerateSpace: return "DegenerateSpace";
    case ErrorCode::DegeneratePoses: return "DegeneratePoses";
    case ErrorCode::MissingE: return "MissingE";
    case ErrorCode::MissingPe: return "MissingPe";
    case ErrorCode::NoBoundaryRank3Point: return "NoBoundaryRank3Point";
    case ErrorCode::ResampleSeedLine: return "ResampleSeedLine";
    case ErrorCode::RankDeficientStart: return "RankDeficientStart";
    case ErrorCode::CorrectorDivergence: return "CorrectorDivergence";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::IO: return "IO";
  }
  return "Unknown";
}

}  // namespace icosapod
