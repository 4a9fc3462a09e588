#pragma once

#include <stdexcept>
#include <string>

namespace icx {

enum class ErrorKind {
  NotPrime,
  Shape,
  DimensionMismatch,
  FieldMismatch,
  RowOneCount,
  ColumnUncovered,
  InvalidProblem,
  PatternHasOne,
  MissingSideValue,
  NotInvolutory,
  CommutationViolation,
  ContainmentViolation,
  RankDeficient,
  SeedCodeInvalid,
  LayoutMismatch,
  ResourceGuard,
  InvalidSpec,
  Parse,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace icx
