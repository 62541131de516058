#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rfa {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  OrderUnavailable,
  NotAGroup,
  SizeBound,
  NotContained,
  ShapeMismatch,
  GroupMismatch,
  NotSemisimpleField,
  NonSplit,
  NotScalar,
  InvalidData,
  NotInvertible,
  Inconsistent,
  NotRigidFrobenius,
  InternalInconsistency,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; the kind tells callers which
/// precondition or structural failure occurred.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rfa
