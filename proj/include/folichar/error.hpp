#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folichar {

// Every failure the library reports carries one of these kinds. The CLI maps
// them onto exit codes (BudgetExceeded -> 3, everything else -> 2).
enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NotSquarefree,
  RationalRootFound,
  ReducibleDetected,
  IrreducibilityUnverified,
  SpaceMismatch,
  BudgetExceeded,
  NotZeroDimensional,
  InexactDivision,
  ZeroForm,
  DegreeOverflow,
  NotADistribution,
  NotTorusInvariant,
  NotLogarithmic,
  DegeneratePencil,
  ConstantFunction,
  EmptyVariety,
  NotAVectorField,
  NotASingularPoint,
  UnresolvedFactor,
  ZeroEigenvalue,
  LeafNotInvariant,
  SizeMismatch,
  ZeroOperator,
  SyntaxError,
  UnknownVariable,
  UnknownName,
  DuplicateName,
  MixedContext,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

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

}  // namespace folichar
