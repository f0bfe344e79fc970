#pragma once

#include <stdexcept>
#include <string>

namespace odograph {

enum class ErrorKind {
  Parse,
  NotBijective,
  UnsupportedFlavor,
  SpecMismatch,
  DegreeOutOfRange,
  LetterOutOfRange,
  CodeOutOfRange,
  IncompatibleAction,
  NonPositive,
  FactorLimit,
  InvalidGenerator,
  InvalidCertificate,
  NotComposable,
  DegenerateSpec,
  DeltaTooLarge,
  DegreeMismatch,
  EmptyChain,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and is what the
/// CLI and the tests switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace odograph
