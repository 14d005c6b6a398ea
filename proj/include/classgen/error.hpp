#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace classgen {

enum class Errc {
  NotPrime,
  DegreeOutOfRange,
  CapExceeded,
  DivisionByZero,
  MixedFields,
  NotAQuadraticExtension,
  DegreeMismatch,
  Singular,
  IndexOutOfRange,
  EqualIndices,
  ZeroScalar,
  NotTraceZero,
  ConditionViolated,
  OddSymplecticDimension,
  UnsupportedParameters,
  CapMisuse,
  MixedInputs,
  MalformedInput,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the `Errc` codes so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace classgen
