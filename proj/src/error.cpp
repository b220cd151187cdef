#include "k3lcs/error.hpp"

namespace k3lcs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidThreshold: return "invalid-threshold";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotInteger: return "not-integer";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Definiteness: return "definiteness";
    case ErrorKind::NotRecognizedLattice: return "not-a-recognized-lattice";
    case ErrorKind::InvalidPlane: return "invalid-plane";
    case ErrorKind::InvalidBasis: return "invalid-basis";
    case ErrorKind::NotInPeriodDomain: return "not-in-omega-plus";
    case ErrorKind::DegeneratePeriod: return "degenerate-period";
    case ErrorKind::WrongComponent: return "wrong-component";
    case ErrorKind::NotInUpperHalfPlane: return "not-in-upper-half-plane";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::RqConditionFailed: return "rq-condition";
    case ErrorKind::NotLatticeIsometry: return "f-not-an-isometry";
    case ErrorKind::GramNotPreserved: return "gram-not-preserved";
    case ErrorKind::NotInPPlus: return "in-P-but-not-P-plus";
    case ErrorKind::NotBlockParabolic: return "not-block-parabolic";
    case ErrorKind::NotARootSystem: return "not-a-root-system";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::Certification: return "certification";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

bool is_validation_error(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::Certification:
    case ErrorKind::Internal:
        return false;
    default:
        return true;
    }
}

}  // namespace k3lcs
