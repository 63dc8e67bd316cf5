#pragma once

#include <stdexcept>
#include <string>

namespace census {

// Base of every error raised by the library. Each subclass names one
// failure mode so callers (notably the CLI) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CENSUS_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(#Name ": " + what) {}          \
  }

CENSUS_DEFINE_ERROR(EvalAtZero);
CENSUS_DEFINE_ERROR(NonUnitConstantTerm);
CENSUS_DEFINE_ERROR(DuplicateLetters);
CENSUS_DEFINE_ERROR(InvalidPermutation);
CENSUS_DEFINE_ERROR(EmptyWord);
CENSUS_DEFINE_ERROR(InvalidWord);
CENSUS_DEFINE_ERROR(InvalidTree);
CENSUS_DEFINE_ERROR(TrivialTree);
CENSUS_DEFINE_ERROR(InvalidSignature);
CENSUS_DEFINE_ERROR(InvalidCongruence);
CENSUS_DEFINE_ERROR(NotRegular);
CENSUS_DEFINE_ERROR(NotIndecomposable);
CENSUS_DEFINE_ERROR(InvalidPartition);
CENSUS_DEFINE_ERROR(NotPrime);
CENSUS_DEFINE_ERROR(NonSquare);
CENSUS_DEFINE_ERROR(DimensionMismatch);
CENSUS_DEFINE_ERROR(TooLarge);
CENSUS_DEFINE_ERROR(InvalidCodimension);

#undef CENSUS_DEFINE_ERROR

}  // namespace census
