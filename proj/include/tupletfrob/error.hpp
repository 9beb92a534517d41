#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tupletfrob {

enum class Errc {
  EmptyInput,
  NonPositiveElement,
  GcdNotOne,
  ModulusNotInSemigroup,
  SemigroupIsN,
  Overflow,
  InvalidPattern,
  KTooLarge,
  NotAdmissible,
  UnsupportedPattern,
  ResidueMismatch,
  KBelowMinimum,
  BoundExceeded,
  InsufficientSamples,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// Domain error raised by every operation in the library. The code is stable
// and is what the CLI maps to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tupletfrob
