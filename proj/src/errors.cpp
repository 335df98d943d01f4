#include "hz/errors.hpp"

namespace hz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NotMonic: return "NotMonic";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::SanityCheckFailed: return "SanityCheckFailed";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::NonIntegralReduction: return "NonIntegralReduction";
    case Errc::WeilBoundViolated: return "WeilBoundViolated";
    case Errc::FunctionalEquationMismatch: return "FunctionalEquationMismatch";
    case Errc::NegativeCount: return "NegativeCount";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

bool errc_is_input_error(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::EvenCharacteristic:
    case Errc::ReduciblePolynomial:
    case Errc::NotMonic:
    case Errc::WrongDegree:
    case Errc::NotSquarefree:
    case Errc::FieldTooLarge:
    case Errc::InvalidInput:
      return true;
    default:
      return false;
  }
}

}  // namespace hz
