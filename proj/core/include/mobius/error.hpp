#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

/// Failure categories raised by the library. Every thrown `mobius::Error`
/// carries exactly one of these.
enum class Errc {
  NonPrimeCharacteristic,
  ReducibleModulus,
  UnsupportedExtension,
  MixedFields,
  DivisionByZero,
  AmbientMismatch,
  DimensionMismatch,
  TooManySubspaces,
  SingularElement,
  SingularGenerator,
  OrderCapExceeded,
  IntervalTooLarge,
  HypothesisViolated,
  PowersetTooLarge,
  NotAPoset,
  NotALattice,
  CoatomsNotCovered,
  TopInX,
  NotDownwardClosed,
  TooManyVertices,
  ReducibleAmbientGroup,
  SubgroupNotContained,
  NotASubgroup,
  MalformedReport,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// True for the errors that signal a configured size cap was hit rather than
/// bad input. The CLI maps these to its "skipped" exit status.
bool is_cap_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mobius
