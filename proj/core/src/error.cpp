#include "hullkit/error.hpp"

namespace hullkit {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kEmptyChain:
      return "EmptyChain";
    case ErrorCode::kBadSide:
      return "BadSide";
    case ErrorCode::kNotConvex:
      return "NotConvex";
    case ErrorCode::kDegenerateFit:
      return "DegenerateFit";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace hullkit
