#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellsurf {

enum class ErrorKind {
  NonConvergent,
  DomainError,
  PoleHit,
  IndeterminateRank,
  DegenerateMultiplier,
  PathBudgetExceeded,
  DegenerateChoice,
  MultiplierMismatch,
  NotTorsion,
  TorsionDegenerate,
  SingularFlattening,
  DegenerateLine,
  InterpolationRankDeficit,
  UnsupportedResonance,
  NonTermination,
  ParityViolation,
  SingularMatrix,
  DecompositionMismatch,
  TotalMismatch,
  ContourPinch,
  UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellsurf
