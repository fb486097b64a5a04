#pragma once

#include <stdexcept>
#include <string>

namespace oq {

// Every failure the library can signal.  The CLI maps kinds onto exit codes;
// tests match on kind() rather than message text.
enum class ErrorKind {
  InvalidRank,
  DimensionMismatch,
  IndexOutOfRange,
  ZeroDenominator,
  ZeroPolynomial,
  ZeroElement,
  HCoefficientPresent,
  UnitIdeal,
  TraceNotZero,
  DuplicateEigenvalue,
  MultiplicityMismatch,
  NotRegular,
  NotEquivariant,
  RepresentationFailure,
  Lemma1Violation,
  SpanDeficient,
  FreeModuleViolation,
  DegreeOverflow,
  SingularEvaluation,
  ParseError,
  UnknownVariable,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::HCoefficientPresent: return "HCoefficientPresent";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::TraceNotZero: return "TraceNotZero";
    case ErrorKind::DuplicateEigenvalue: return "DuplicateEigenvalue";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::RepresentationFailure: return "RepresentationFailure";
    case ErrorKind::Lemma1Violation: return "Lemma1Violation";
    case ErrorKind::SpanDeficient: return "SpanDeficient";
    case ErrorKind::FreeModuleViolation: return "FreeModuleViolation";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::SingularEvaluation: return "SingularEvaluation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace oq
