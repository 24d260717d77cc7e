#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotsurf {

enum class ErrorKind {
  MalformedToken,
  LabelCountMismatch,
  PassageMismatch,
  MalformedTuple,
  ArcCountMismatch,
  Disconnected,
  MultipleComponents,
  OddLength,
  NonRealizable,
  NonRealizableRotation,
  OddEuler,
  BadDecoration,
  IdentityViolation,
  PreconditionViolated,
  NotGenusOne,
  NotCellular,
  ClassUnreachable,
  LemmaViolation,
  NotAlmostAlternating,
  ParseError,
  IoError,
  GoldenMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the category instead of the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knotsurf
