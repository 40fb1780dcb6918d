#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitorder {

enum class ErrorCode {
  NonZeroDiagonal,
  NotSquare,
  DimensionTooSmall,
  NegativeCycle,
  Overflow,
  NotAnOrder,
  NotReduced,
  EmptyPolytope,
  EmptyVertexList,
  EnumerationLimit,
  DimensionMismatch,
  SingularConjugator,
  SingularInput,
  NonIntegralInput,
  AlreadyDiagonal,
  UnsupportedDimension,
  InvalidPrime,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; the code
// is the stable part, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splitorder
