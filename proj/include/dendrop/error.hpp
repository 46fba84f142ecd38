#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dendrop {

enum class ErrorCode {
  Singular,
  NoSolution,
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  DimensionMismatch,
  NotAssociative,
  KindMismatch,
  NotInvertible,
  NotIntertwining,
  NotMultiplicative,
  InvalidOperator,
  InvalidDendriform,
  KernelNotIdeal,
  FieldNotFinite,
  DimensionCap,
  BudgetExceeded,
  SyntaxError,
  SchemaError,
  BadRational,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dendrop
