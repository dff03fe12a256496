#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullkit {

enum class ErrorCode {
  kEmptyInput,
  kEmptyChain,
  kBadSide,
  kNotConvex,
  kDegenerateFit,
  kInvalidArgument,
  kParse,
};

std::string_view ToString(ErrorCode code);

// All library failures are reported through this exception; `code()` lets
// callers branch without parsing the message.
class HullError : public std::runtime_error {
 public:
  HullError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hullkit
