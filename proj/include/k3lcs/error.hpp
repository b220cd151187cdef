#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3lcs {

enum class ErrorKind {
    InvalidThreshold,
    DivisionByZero,
    NotInteger,
    Parse,
    Definiteness,
    NotRecognizedLattice,
    InvalidPlane,
    InvalidBasis,
    NotInPeriodDomain,
    DegeneratePeriod,
    WrongComponent,
    NotInUpperHalfPlane,
    Precondition,
    RqConditionFailed,
    NotLatticeIsometry,
    GramNotPreserved,
    NotInPPlus,
    NotBlockParabolic,
    NotARootSystem,
    TheoremViolation,
    Certification,
    Internal,
};

/// Stable identifier used in structured diagnostics.
std::string_view to_string(ErrorKind kind);

/// True for errors caused by inputs that fail a documented invariant (CLI exit code 2).
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string invariant, const std::string& message)
        : std::runtime_error(message), kind_(kind), invariant_(std::move(invariant)) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Name of the violated invariant or precondition.
    const std::string& invariant() const noexcept { return invariant_; }

private:
    ErrorKind kind_;
    std::string invariant_;
};

}  // namespace k3lcs
