#pragma once

#include <stdexcept>
#include <string>

namespace entropics {

// Process exit statuses the CLI maps errors onto.
enum class ExitCode : int {
  ok = 0,
  invalid_input = 2,
  cap_exceeded = 3,
  non_convergence = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

#define ENTROPICS_DEFINE_ERROR(Name, Code)                          \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(Code, what) {}   \
  }

ENTROPICS_DEFINE_ERROR(InvalidInput, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(SpaceMismatch, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(NotAProductSpace, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(AbsContViolation, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(FaithfulnessError, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(AlphaOutOfRange, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(ThetaOutOfOpenRange, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(ThetaOutOfRange, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(DegenerateVariable, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(OrderTooLarge, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(SupportNotInvariant, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(EmptySample, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(SOutOfRange, ExitCode::invalid_input);
ENTROPICS_DEFINE_ERROR(EnumerationCapExceeded, ExitCode::cap_exceeded);
ENTROPICS_DEFINE_ERROR(AlphabetTooLarge, ExitCode::cap_exceeded);
ENTROPICS_DEFINE_ERROR(QuadratureNonConvergence, ExitCode::non_convergence);
ENTROPICS_DEFINE_ERROR(RootNonConvergence, ExitCode::non_convergence);

#undef ENTROPICS_DEFINE_ERROR

}  // namespace entropics
