#include "splitorder/error.hpp"

namespace splitorder {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NegativeCycle: return "NegativeCycle";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAnOrder: return "NotAnOrder";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::EmptyVertexList: return "EmptyVertexList";
    case ErrorCode::EnumerationLimit: return "EnumerationLimit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularConjugator: return "SingularConjugator";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::NonIntegralInput: return "NonIntegralInput";
    case ErrorCode::AlreadyDiagonal: return "AlreadyDiagonal";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace splitorder
