#pragma once

#include <stdexcept>
#include <string>

namespace amoeba {

// Every failure mode the library reports deliberately carries one of these
// codes so callers (and the CLI exit-code mapping) can dispatch without
// string matching.
enum class ErrorCode {
  SyntaxError,
  EmptyPolynomial,
  InvalidArgument,
  NonUnimodularMatrix,
  DegenerateNewtonPolygon,
  BranchTrackingFailure,
  DegenerateFiber,
  NotLocallyAffine,
  BranchMismatch,
  NoConvergence,
  ResolutionInsufficient,
  AreaBoundViolation,
  SearchNotFound,
  UnknownName,
  InternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors additionally carry the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace amoeba
