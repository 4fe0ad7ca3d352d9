#pragma once

#include <stdexcept>
#include <string>

namespace abtk {

// Base class for all domain errors thrown by the library.  `code()` is the
// stable machine-readable name used by the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define ABTK_DEFINE_ERROR(NAME)                              \
  class NAME : public Error {                                \
   public:                                                   \
    explicit NAME(const std::string& w) : Error(#NAME, w) {} \
  }

ABTK_DEFINE_ERROR(InvalidInput);
ABTK_DEFINE_ERROR(PoleError);
ABTK_DEFINE_ERROR(RangeError);
ABTK_DEFINE_ERROR(NonConvergence);
ABTK_DEFINE_ERROR(PoleOnNode);
ABTK_DEFINE_ERROR(BlowUp);
ABTK_DEFINE_ERROR(UnitarityViolation);
ABTK_DEFINE_ERROR(SolitonsPresent);
ABTK_DEFINE_ERROR(ContourTooCoarse);
ABTK_DEFINE_ERROR(ReflectionAtUnitModulus);
ABTK_DEFINE_ERROR(OnBand);
ABTK_DEFINE_ERROR(TooCloseToEndpoint);
ABTK_DEFINE_ERROR(ZeroReflectionAtPhasePoint);
ABTK_DEFINE_ERROR(OnCriticalPoint);
ABTK_DEFINE_ERROR(WrongRegime);
ABTK_DEFINE_ERROR(PoleAtZero);
ABTK_DEFINE_ERROR(NeutralOnContour);
ABTK_DEFINE_ERROR(FixedPointDivergence);
ABTK_DEFINE_ERROR(DomainEscape);

#undef ABTK_DEFINE_ERROR

}  // namespace abtk
