#pragma once

#include <stdexcept>
#include <string>

namespace nilhecke {

/// Base class of every error raised by the library. Errors are reported
/// through exceptions; the CLI maps them to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NILHECKE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

NILHECKE_DEFINE_ERROR(RingMismatch)
NILHECKE_DEFINE_ERROR(NotDivisible)
NILHECKE_DEFINE_ERROR(NoCanonicalMap)
NILHECKE_DEFINE_ERROR(NotInRing)
NILHECKE_DEFINE_ERROR(ParseError)
NILHECKE_DEFINE_ERROR(UnknownPreset)
NILHECKE_DEFINE_ERROR(InvalidCartanData)
NILHECKE_DEFINE_ERROR(GroupNotFinite)
NILHECKE_DEFINE_ERROR(NotARoot)
NILHECKE_DEFINE_ERROR(NotBruhatComparable)
NILHECKE_DEFINE_ERROR(TorsionNotInvertible)
NILHECKE_DEFINE_ERROR(ExpansionFailed)
NILHECKE_DEFINE_ERROR(NotTypeA)
NILHECKE_DEFINE_ERROR(UnsupportedRing)
NILHECKE_DEFINE_ERROR(InvalidRelation)
NILHECKE_DEFINE_ERROR(MembershipUndecidable)
NILHECKE_DEFINE_ERROR(RankDeficientSubgroup)
NILHECKE_DEFINE_ERROR(UnknownInvariantGenerators)
NILHECKE_DEFINE_ERROR(InternalError)

#undef NILHECKE_DEFINE_ERROR

}  // namespace nilhecke
