#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice_equiv {

enum class ErrorKind {
  DegenerateInput,
  NotConvexPosition,
  DimensionMismatch,
  ZeroVector,
  TooLarge,
  RegionTooLarge,
  CapExceeded,
  DegenerateResult,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this one exception type; `kind()`
/// tells callers (the CLI exit-code mapping, the Python layer) what went wrong.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lattice_equiv
