#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klyachko {

enum class ErrorCode {
  // finite-linear-groups
  NonPrimeP,
  FieldTooLarge,
  NoIrreduciblePolynomial,
  GroupTooLarge,
  SizeMismatch,
  NotInSubgroup,
  CacheFormat,
  // character-engine
  ArenaTooSmall,
  ArenaMismatch,
  EigenSplitFailure,
  LiftOutOfRange,
  InvariantViolation,
  // segment-calculus
  EmptyBlock,
  ParseError,
  DegreeMismatch,
  // eisenstein-combinatorics
  UnsupportedComposition,
  PoleAtEvaluationPoint,
  MissingAtom,
  DivisionByZero,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the parameter parser; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace klyachko
