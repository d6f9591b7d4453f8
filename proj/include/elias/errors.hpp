#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elias {

// Every library error carries a stable kind string; the CLI maps any
// EliasError to exit code 2, expectation mismatches to exit code 1.
class EliasError : public std::runtime_error {
public:
  EliasError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define ELIAS_DEFINE_ERROR(NAME)                                         \
  struct NAME : EliasError {                                             \
    explicit NAME(const std::string& w) : EliasError(#NAME, w) {}        \
  }

ELIAS_DEFINE_ERROR(EmptyInput);
ELIAS_DEFINE_ERROR(InvalidGenerator);
ELIAS_DEFINE_ERROR(NotCofinite);
ELIAS_DEFINE_ERROR(InputTooLarge);
ELIAS_DEFINE_ERROR(NotMember);
ELIAS_DEFINE_ERROR(EmptyGenerators);
ELIAS_DEFINE_ERROR(AmbientMismatch);
ELIAS_DEFINE_ERROR(NotContained);
ELIAS_DEFINE_ERROR(NotIntegral);
ELIAS_DEFINE_ERROR(NotMPrimary);
ELIAS_DEFINE_ERROR(NotSymmetric);
ELIAS_DEFINE_ERROR(NotGorenstein);
ELIAS_DEFINE_ERROR(JNotUlrich);
ELIAS_DEFINE_ERROR(TruncationTooSmall);
ELIAS_DEFINE_ERROR(TruncationUnsound);
ELIAS_DEFINE_ERROR(NotInRing);
ELIAS_DEFINE_ERROR(ZeroDivisorWitness);
// Raised when two routes that must agree by a theorem disagree: always a bug.
ELIAS_DEFINE_ERROR(InternalDisagreement);

#undef ELIAS_DEFINE_ERROR

class ParseError : public EliasError {
public:
  ParseError(const std::string& w, std::size_t position)
      : EliasError("ParseError", w + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace elias
