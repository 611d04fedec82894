#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqg {

// Stable numeric values: they are exported through the C API.
enum class ErrorCode : int {
  InvalidInput = 1,
  NotAGroup = 2,
  CapExceeded = 3,
  UnknownName = 4,
  UnsupportedParam = 5,
  NotCentral = 6,
  WrongOrder = 7,
  NotNilpotent = 8,
  NotAbelian = 9,
  AbelianInput = 10,
  SizeCap = 11,
  NotAbelianCollection = 12,
  IndexMismatch = 13,
  NotTC = 14,
  NotSolvable = 15,
  TooLarge = 16,
  ColimitNotFinite = 17,
  Internal = 18,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bqg
