#pragma once

#include <stdexcept>
#include <string>

namespace qhalg {

/// Base of every library error; `code()` is the stable name used in
/// structured CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define QHALG_ERROR(Name)                                              \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

QHALG_ERROR(ParseError);
QHALG_ERROR(NotAPartialOrder);
QHALG_ERROR(NotBounded);
QHALG_ERROR(ElementOutOfRange);
QHALG_ERROR(NotAboveBoth);
QHALG_ERROR(NotFiniteDimensional);
QHALG_ERROR(InadmissibleRelation);
QHALG_ERROR(BudgetExceeded);
QHALG_ERROR(MixedAmbient);
QHALG_ERROR(Inconclusive);
QHALG_ERROR(NotQuasiHereditary);
QHALG_ERROR(NotOneQuasiHereditary);
QHALG_ERROR(BasisDefect);
QHALG_ERROR(SequenceRejected);
QHALG_ERROR(SubquotientMismatch);
QHALG_ERROR(ClosureNotNested);
QHALG_ERROR(EquivalenceViolated);
QHALG_ERROR(TiltingIncomplete);
QHALG_ERROR(UniquenessFailed);
QHALG_ERROR(UsageError);

#undef QHALG_ERROR

}  // namespace qhalg
