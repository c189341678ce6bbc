#pragma once
#include <stdexcept>
#include <string>

namespace genuslab {

enum class ErrorCode {
  NotAPermutation,
  AlphaFixedPoint,
  Disconnected,
  NonOrientableInconsistency,
  EmptyFaceSet,
  SizeTooLarge,
  NotSeeded,
  NonIntegralEntry,
  InconsistentSeed,
  TableTooSmall,
  DomainError,
  NoConvergence,
  QuadratureFailure,
  Exhausted,
  EmptyClass,
  InvalidEdge,
  OddChildCount,
  MalformedWalk,
  NotAClosedUnion,
  DegenerateTotalCollapse,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genuslab
