#include "mobius/error.hpp"

namespace mobius {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedExtension: return "UnsupportedExtension";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooManySubspaces: return "TooManySubspaces";
    case Errc::SingularElement: return "SingularElement";
    case Errc::SingularGenerator: return "SingularGenerator";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::IntervalTooLarge: return "IntervalTooLarge";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PowersetTooLarge: return "PowersetTooLarge";
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NotALattice: return "NotALattice";
    case Errc::CoatomsNotCovered: return "CoatomsNotCovered";
    case Errc::TopInX: return "TopInX";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::TooManyVertices: return "TooManyVertices";
    case Errc::ReducibleAmbientGroup: return "ReducibleAmbientGroup";
    case Errc::SubgroupNotContained: return "SubgroupNotContained";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::MalformedReport: return "MalformedReport";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_cap_error(Errc code) noexcept {
  switch (code) {
    case Errc::TooManySubspaces:
    case Errc::OrderCapExceeded:
    case Errc::IntervalTooLarge:
    case Errc::PowersetTooLarge:
    case Errc::TooManyVertices:
      return true;
    default:
      return false;
  }
}

}  // namespace mobius
