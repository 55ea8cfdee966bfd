#include "bellift/errors.hpp"

namespace bellift {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotAPrime: return "NotAPrime";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::NotPadicInteger: return "NotPadicInteger";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::CompositionNeedsZeroConstant: return "CompositionNeedsZeroConstant";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::LinearCoefficientZero: return "LinearCoefficientZero";
    case Errc::DegenerateExponent: return "DegenerateExponent";
    case Errc::NonIntegralShift: return "NonIntegralShift";
    case Errc::NotARootModP: return "NotARootModP";
    case Errc::DerivativeNotUnit: return "DerivativeNotUnit";
    case Errc::DerivativeValuationMismatch: return "DerivativeValuationMismatch";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::InsufficientCongruence: return "InsufficientCongruence";
    case Errc::BadExponents: return "BadExponents";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ResidualCheckFailed: return "ResidualCheckFailed";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::WrongValuation: return "WrongValuation";
    case Errc::UnitPartNotOne: return "UnitPartNotOne";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::NoSuitableRoot: return "NoSuitableRoot";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NoMultipleRoot: return "NoMultipleRoot";
  }
  return "Unknown";
}

}  // namespace bellift
