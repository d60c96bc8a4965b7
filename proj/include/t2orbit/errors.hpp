#pragma once

#include <stdexcept>
#include <string>

namespace t2orbit {

enum class Errc {
  TooShort,
  NotPrimitive,
  IllegalDeterminant,
  NotUnimodular,
  WrongSize,
  UnclassifiedT4,
  InvalidSplit,
  NoSplitAvailable,
  OddDimension,
  OrderViolation,
  NonPositiveChi,
  InvalidArgument,
  ParseError,
  Overflow,
};

const char* errc_name(Errc code);

/// Domain failure carrying a stable error code for machine-readable output.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, std::string detail)
      : std::runtime_error(std::move(detail)), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace t2orbit
