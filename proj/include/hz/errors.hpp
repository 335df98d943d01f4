#pragma once

#include <stdexcept>
#include <string>

namespace hz {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  ReduciblePolynomial,
  NotAUnit,
  DivisionByZero,
  FieldTooLarge,
  NotMonic,
  WrongDegree,
  NotSquarefree,
  NonUnitLeadingCoefficient,
  NotCoprime,
  InexactDivision,
  SanityCheckFailed,
  ConvergenceFailure,
  NonIntegralReduction,
  WeilBoundViolated,
  FunctionalEquationMismatch,
  NegativeCount,
  InvalidInput,
};

const char* errc_name(Errc c);

// Input-validation errors map to CLI exit code 2, everything else in this
// enum is an internal audit failure and maps to exit code 3.
bool errc_is_input_error(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hz
