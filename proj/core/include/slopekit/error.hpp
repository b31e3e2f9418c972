#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopekit {

// Every failure the library reports is a DomainError carrying one of these
// codes. The CLI prints name() verbatim.
enum class ErrorCode {
  ZeroVector,
  NotPrimitive,
  EqualSlopes,
  NotAdjacent,
  RepeatedSlope,
  DegenerateLeg,
  NotUnimodular,
  BoundaryInterface,
  OutOfDomain,
  NonIntegerSlope,
  NotMixed,
  NonUnimodularFrame,
  UnknownOrbit,
  UnboundedSearch,
  InconsistentConstraints,
  UnsupportedFraming,
  ParityViolation,
  Overflow,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace slopekit
