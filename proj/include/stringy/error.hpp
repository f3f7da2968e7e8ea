#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stringy {

enum class ErrorCode {
  ZeroVector = 1,
  ShapeMismatch,
  SingularMatrix,
  EmptyInput,
  NotFullDimensional,
  DegenerateInput,
  OriginNotInterior,
  NotAFacet,
  NotSimplicial,
  UnsupportedDimension,
  NotCanonicalFano,
  NotLDP,
  NotAlmostPseudoreflexive,
  InternalInconsistency,
  ParseError,
  EmptyCheckSet,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace stringy
