#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "k3lcs/lattice.hpp"
#include "k3lcs/mat2.hpp"
#include "k3lcs/scalars.hpp"

namespace k3lcs {

using ComplexLambda = std::array<GaussianRational, kLambdaRank>;

/// Bilinear (not Hermitian) extension of the Lambda pairing.
GaussianRational lambda_pair(const Frame& frame, const ComplexLambda& z, const ComplexLambda& w);
GaussianRational lambda_pair(const Frame& frame, const ComplexLambda& z, const LambdaVector& c);
ComplexLambda real_part(const ComplexLambda& z);
ComplexLambda imag_part(const ComplexLambda& z);
ComplexLambda to_complex(const LambdaVector& c);

/// A vector omega = (a1, a2)(b1, b2)(c) of L (x) C. Hodge-Riemann conditions are checked by
/// validate_period, not assumed.
struct PeriodVector {
    std::array<GaussianRational, 2> a;
    std::array<GaussianRational, 2> b;
    ComplexLambda c;
    FrameKind frame = FrameKind::E8E8;

    PeriodVector conj() const;
    PeriodVector scaled(const GaussianRational& s) const;
    friend bool operator==(const PeriodVector&, const PeriodVector&) = default;
};

/// Bilinear pairing <omega, eta> on L (x) C.
GaussianRational pair(const PeriodVector& p, const PeriodVector& q);
GaussianRational pair(const PeriodVector& p, const LatticeElement& r);

/// <omega, omega> = 0 and <omega, conj omega> > 0; throws ErrorKind::NotInPeriodDomain otherwise.
void validate_period(const PeriodVector& p);

/// N(gamma) = <gamma, y2> y1 - <gamma, y1> y2, i.e. (a)(b)(c) -> (0,0)(a2,-a1)(0).
PeriodVector nilpotent(const PeriodVector& p);

struct TubeCoords {
    GaussianRational tau;
    GaussianRational u;
    ComplexLambda z;
    FrameKind frame = FrameKind::E8E8;
    friend bool operator==(const TubeCoords&, const TubeCoords&) = default;
};

struct NarainCoords {
    GaussianRational tau;
    GaussianRational u_tilde;
    ComplexLambda z;
    FrameKind frame = FrameKind::E8E8;
    friend bool operator==(const NarainCoords&, const NarainCoords&) = default;
};

/// im(tau) > 0 and 2 tau2 u2 + (z2, z2) > 0.
void validate(const TubeCoords& t);
/// im(tau) > 0 and im(u_tilde) > 0.
void validate(const NarainCoords& n);

/// 2 tau2 u2 + (z2, z2).
Rational tube_positivity(const TubeCoords& t);

PeriodVector omega_from_tube(const TubeCoords& t);
/// Normalizes so that <omega, y2> = 1 and reads off (tau, u, z). Rejects the conjugate component
/// with ErrorKind::WrongComponent.
TubeCoords tube_from_omega(const PeriodVector& p);
/// The representative with <omega, y2> = 1.
PeriodVector normalize(const PeriodVector& p);

NarainCoords narain_from_tube(const TubeCoords& t);
TubeCoords tube_from_narain(const NarainCoords& n);
PeriodVector omega_from_narain(const NarainCoords& n);
NarainCoords narain_from_omega(const PeriodVector& p);

/// exp(wN) omega = omega + w N(omega); revalidated.
PeriodVector apply_nilpotent(const PeriodVector& p, const GaussianRational& w);

struct ReductionResult {
    Mat2 m;
    GaussianRational tau_reduced;
    Rational rho;
};

/// SL(2,Z) reduction into the closed standard fundamental domain; rho = Im of the representative.
ReductionResult reduce_sl2(const GaussianRational& tau);

enum class Binding { Rho, TwoOverSqrt3, None };
std::string_view to_string(Binding b);

struct LcsReport {
    bool is_lcs = false;
    Rational rho;
    Rational u_tilde_2;
    /// Which of rho and 2/sqrt(3) is the larger bound.
    Binding binding = Binding::None;
    /// exp(-2 pi max(rho, 2/sqrt 3)), radius of the punctured disc; informational only.
    double disc_radius_approx = 0.0;
};

/// u_tilde_2 > max(rho(tau), 2/sqrt 3), decided exactly.
LcsReport lcs_test(const NarainCoords& n);

struct BasisInvariants {
    GaussianRational tau;
    /// <omega, conj omega> / (|<omega, y2'>|^2 Im tau), evaluated literally.
    Rational u2_literal;
    /// Narain u_tilde_2, filled when the basis is the standard (y1, y2).
    std::optional<Rational> narain_u2;
    /// True when y1' was negated to make Im tau positive.
    bool reoriented = false;
};

BasisInvariants tau_u2_from_basis(const PeriodVector& p, const LatticeElement& y1p, const LatticeElement& y2p);

struct Lemma1Report {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    /// Exact sign of |<w,r>| - <r,r> tau2 / (2|a2 tau - a1|) - |a2 tau - a1| u2.
    int lemma_sign = 0;
    double lemma_gap_approx = 0.0;
    /// |Im(<w,r>/(a2 tau - a1))| - <r,r> tau2 / (2|a2 tau - a1|^2) - u2, exact.
    Rational remark_gap;
};

/// Evaluates both lower bounds for |<omega, r>| with r outside V^perp. omega is normalized internally.
Lemma1Report lemma1_gap(const PeriodVector& p, const LatticeElement& r);

}  // namespace k3lcs
