#include "stringy/error.hpp"

namespace stringy {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NotCanonicalFano: return "NotCanonicalFano";
    case ErrorCode::NotLDP: return "NotLDP";
    case ErrorCode::NotAlmostPseudoreflexive: return "NotAlmostPseudoreflexive";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyCheckSet: return "EmptyCheckSet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace stringy
