#include "ellsurf/errors.hpp"

namespace ellsurf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::IndeterminateRank: return "IndeterminateRank";
    case ErrorKind::DegenerateMultiplier: return "DegenerateMultiplier";
    case ErrorKind::PathBudgetExceeded: return "PathBudgetExceeded";
    case ErrorKind::DegenerateChoice: return "DegenerateChoice";
    case ErrorKind::MultiplierMismatch: return "MultiplierMismatch";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::TorsionDegenerate: return "TorsionDegenerate";
    case ErrorKind::SingularFlattening: return "SingularFlattening";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::InterpolationRankDeficit: return "InterpolationRankDeficit";
    case ErrorKind::UnsupportedResonance: return "UnsupportedResonance";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::TotalMismatch: return "TotalMismatch";
    case ErrorKind::ContourPinch: return "ContourPinch";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace ellsurf
