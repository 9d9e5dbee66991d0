#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rp2 {

enum class ErrorCode {
  CodirectionalVectors,
  SeamPointOffCircle,
  InvalidDiagram,
  OppositeEndDirections,
  DuplicateSymbol,
  MissingSymbol,
  MismatchedLoopCount,
  MoveBlocked,
  Exhausted,
  LimitExceeded,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this one exception type; the code
// tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rp2
