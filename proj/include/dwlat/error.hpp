#pragma once

#include <stdexcept>
#include <string>

namespace dwlat {

/// Error categories surfaced by the library. The C API maps each category to
/// a stable integer code, see dwlat.h.
enum class ErrorCode {
  UnknownType = 1,
  Parse,
  Index,
  InvalidSubdiagram,
  ComponentMismatch,
  NonPositiveLevel,
  NotDominant,
  Incomparable,
  NotACocover,
  UnsupportedType,
  IntervalOverflow,
  WindowExhausted,
  PredictionMismatch,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dwlat
