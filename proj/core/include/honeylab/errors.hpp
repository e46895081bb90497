#pragma once

#include <stdexcept>
#include <string>

namespace honeylab {

enum class ErrorCode {
  DegenerateInput,
  OriginNotInterior,
  ZeroDirection,
  InvalidN,
  OddN,
  OutOfRange,
  InsufficientTable,
  EmptyWindow,
  NonTilingPrototype,
  UnboundedKStar,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Throws honeylab::Error; keeps call sites one line.
[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace honeylab
