#include "klyachko/error.hpp"

namespace klyachko {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NoIrreduciblePolynomial: return "NoIrreduciblePolynomial";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::CacheFormat: return "CacheFormat";
    case ErrorCode::ArenaTooSmall: return "ArenaTooSmall";
    case ErrorCode::ArenaMismatch: return "ArenaMismatch";
    case ErrorCode::EigenSplitFailure: return "EigenSplitFailure";
    case ErrorCode::LiftOutOfRange: return "LiftOutOfRange";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnsupportedComposition: return "UnsupportedComposition";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::MissingAtom: return "MissingAtom";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace klyachko
