#pragma once

#include <stdexcept>
#include <string>

namespace bellift {

/// Domain error codes shared by every module. The CLI maps these to exit code 1.
enum class Errc {
  InvalidArgument,
  NotAPrime,
  OracleTooLarge,
  NotPadicInteger,
  NotAUnit,
  PrimeMismatch,
  CompositionNeedsZeroConstant,
  NotInvertible,
  LinearCoefficientZero,
  DegenerateExponent,
  NonIntegralShift,
  NotARootModP,
  DerivativeNotUnit,
  DerivativeValuationMismatch,
  EvenPrime,
  InsufficientCongruence,
  BadExponents,
  NotDivisible,
  OutOfRange,
  ResidualCheckFailed,
  ZeroConstantTerm,
  ShapeMismatch,
  WrongValuation,
  UnitPartNotOne,
  InsufficientPrecision,
  IntegralityViolation,
  DivisibilityViolation,
  NoSuitableRoot,
  PrecisionExhausted,
  NoMultipleRoot,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bellift
