#include "k3lcs/period.hpp"

#include <cmath>
#include <numbers>

namespace k3lcs {

// ---------------------------------------------------------------------------------------------

namespace {

GaussianRational times(std::int64_t k, const GaussianRational& z) {
    return {z.re() * Rational(k), z.im() * Rational(k)};
}

ComplexLambda gram_apply(const Frame& frame, const ComplexLambda& w) {
    ComplexLambda out;
    for (const auto& e : frame.gram_entries()) {
        if (!w[e.j].is_zero()) out[e.i] += times(e.value, w[e.j]);
    }
    return out;
}

ComplexLambda scale(const ComplexLambda& z, const GaussianRational& s) {
    ComplexLambda out;
    for (std::size_t i = 0; i < kLambdaRank; ++i) out[i] = z[i] * s;
    return out;
}

}  // namespace

GaussianRational lambda_pair(const Frame& frame, const ComplexLambda& z, const ComplexLambda& w) {
    ComplexLambda gw = gram_apply(frame, w);
    GaussianRational s;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        if (!z[i].is_zero() && !gw[i].is_zero()) s += z[i] * gw[i];
    }
    return s;
}

GaussianRational lambda_pair(const Frame& frame, const ComplexLambda& z, const LambdaVector& c) {
    LambdaVector gc = frame.lambda_form(c);
    GaussianRational s;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        if (gc[i] != 0) s += times(gc[i], z[i]);
    }
    return s;
}

ComplexLambda real_part(const ComplexLambda& z) {
    ComplexLambda out;
    for (std::size_t i = 0; i < kLambdaRank; ++i) out[i] = GaussianRational(z[i].re());
    return out;
}

ComplexLambda imag_part(const ComplexLambda& z) {
    ComplexLambda out;
    for (std::size_t i = 0; i < kLambdaRank; ++i) out[i] = GaussianRational(z[i].im());
    return out;
}

ComplexLambda to_complex(const LambdaVector& c) {
    ComplexLambda out;
    for (std::size_t i = 0; i < kLambdaRank; ++i) out[i] = GaussianRational(c[i]);
    return out;
}

PeriodVector PeriodVector::conj() const {
    PeriodVector p = *this;
    for (auto& x : p.a) x = x.conj();
    for (auto& x : p.b) x = x.conj();
    for (auto& x : p.c) x = x.conj();
    return p;
}

PeriodVector PeriodVector::scaled(const GaussianRational& s) const {
    PeriodVector p = *this;
    for (auto& x : p.a) x *= s;
    for (auto& x : p.b) x *= s;
    p.c = scale(p.c, s);
    return p;
}

GaussianRational pair(const PeriodVector& p, const PeriodVector& q) {
    const Frame& frame = Frame::get(p.frame);
    return p.a[0] * q.b[0] + p.a[1] * q.b[1] + p.b[0] * q.a[0] + p.b[1] * q.a[1] + lambda_pair(frame, p.c, q.c);
}

GaussianRational pair(const PeriodVector& p, const LatticeElement& r) {
    const Frame& frame = Frame::get(p.frame);
    return times(r.b[0], p.a[0]) + times(r.b[1], p.a[1]) + times(r.a[0], p.b[0]) + times(r.a[1], p.b[1]) +
           lambda_pair(frame, p.c, r.c);
}

void validate_period(const PeriodVector& p) {
    if (!pair(p, p).is_zero()) {
        throw Error(ErrorKind::NotInPeriodDomain, "<omega,omega>=0", "period vector is not isotropic");
    }
    GaussianRational h = pair(p, p.conj());
    if (!h.is_real() || h.re().sign() <= 0) {
        throw Error(ErrorKind::NotInPeriodDomain, "<omega,conj(omega)>>0",
                    "period vector violates <omega, conj omega> > 0 (got " + h.str() + ")");
    }
}

PeriodVector nilpotent(const PeriodVector& p) {
    PeriodVector n;
    n.frame = p.frame;
    n.b = {p.a[1], -p.a[0]};
    return n;
}

Rational tube_positivity(const TubeCoords& t) {
    const Frame& frame = Frame::get(t.frame);
    ComplexLambda z2 = imag_part(t.z);
    return Rational(2) * t.tau.im() * t.u.im() + lambda_pair(frame, z2, z2).re();
}

void validate(const TubeCoords& t) {
    if (t.tau.im().sign() <= 0) {
        throw Error(ErrorKind::NotInPeriodDomain, "Im(tau)>0", "tube coordinate tau is not in the upper half-plane");
    }
    if (tube_positivity(t).sign() <= 0) {
        throw Error(ErrorKind::NotInPeriodDomain, "2*tau2*u2+(z2,z2)>0", "tube coordinates violate 2 tau2 u2 + (z2,z2) > 0");
    }
}

void validate(const NarainCoords& n) {
    if (n.tau.im().sign() <= 0) {
        throw Error(ErrorKind::NotInPeriodDomain, "Im(tau)>0", "Narain coordinate tau is not in the upper half-plane");
    }
    if (n.u_tilde.im().sign() <= 0) {
        throw Error(ErrorKind::NotInPeriodDomain, "Im(u_tilde)>0", "Narain coordinate u_tilde is not in the upper half-plane");
    }
}

PeriodVector omega_from_tube(const TubeCoords& t) {
    validate(t);
    const Frame& frame = Frame::get(t.frame);
    PeriodVector p;
    p.frame = t.frame;
    p.a = {t.tau, GaussianRational(1)};
    GaussianRational zz = lambda_pair(frame, t.z, t.z);
    p.b = {t.u, -(t.tau * t.u) - zz / GaussianRational(2)};
    p.c = t.z;
    validate_period(p);
    return p;
}

PeriodVector normalize(const PeriodVector& p) {
    const GaussianRational& s = p.a[1];  // <omega, y2>
    if (s.is_zero()) {
        throw Error(ErrorKind::DegeneratePeriod, "<omega,y2>!=0", "period vector has <omega, y2> = 0");
    }
    return p.scaled(GaussianRational(1) / s);
}

TubeCoords tube_from_omega(const PeriodVector& p) {
    validate_period(p);
    PeriodVector q = normalize(p);
    if (q.a[0].im().sign() < 0) {
        throw Error(ErrorKind::WrongComponent, "Im(tau)>0",
                    "period lies in the conjugate component (Im tau < 0); conjugate the input");
    }
    return {q.a[0], q.b[0], q.c, p.frame};
}

NarainCoords narain_from_tube(const TubeCoords& t) {
    validate(t);
    const Frame& frame = Frame::get(t.frame);
    ComplexLambda z2 = imag_part(t.z);
    GaussianRational shift = lambda_pair(frame, t.z, z2) / GaussianRational(Rational(2) * t.tau.im());
    return {t.tau, t.u + shift, t.z, t.frame};
}

TubeCoords tube_from_narain(const NarainCoords& n) {
    validate(n);
    const Frame& frame = Frame::get(n.frame);
    ComplexLambda z2 = imag_part(n.z);
    GaussianRational shift = lambda_pair(frame, n.z, z2) / GaussianRational(Rational(2) * n.tau.im());
    return {n.tau, n.u_tilde - shift, n.z, n.frame};
}

PeriodVector omega_from_narain(const NarainCoords& n) { return omega_from_tube(tube_from_narain(n)); }

NarainCoords narain_from_omega(const PeriodVector& p) { return narain_from_tube(tube_from_omega(p)); }

PeriodVector apply_nilpotent(const PeriodVector& p, const GaussianRational& w) {
    PeriodVector n = nilpotent(p);
    PeriodVector q = p;
    q.b[0] += w * n.b[0];
    q.b[1] += w * n.b[1];
    validate_period(q);
    return q;
}

// ---------------------------------------------------------------------------------------------

ReductionResult reduce_sl2(const GaussianRational& tau) {
    if (tau.im().sign() <= 0) {
        throw Error(ErrorKind::NotInUpperHalfPlane, "Im(tau)>0", "tau = " + tau.str() + " is not in the upper half-plane");
    }
    Mat2 m = Mat2::identity();
    GaussianRational t = tau;
    const Rational half(1, 2);
    for (;;) {
        // n = ceil(re - 1/2) brings re(t) into (-1/2, 1/2].
        Rational shifted = t.re() - half;
        Rational n = -((-shifted).floor());
        if (!n.is_zero()) {
            t -= GaussianRational(n);
            m = Mat2::t(-n.to_int64()) * m;
        }
        if (abs_sq(t) < Rational(1)) {
            t = GaussianRational(-1) / t;
            m = Mat2::s() * m;
        } else {
            break;
        }
    }
    return {m, t, t.im()};
}

std::string_view to_string(Binding b) {
    switch (b) {
    case Binding::Rho: return "RHO";
    case Binding::TwoOverSqrt3: return "TWO_OVER_SQRT3";
    case Binding::None: return "NONE";
    }
    return "NONE";
}

LcsReport lcs_test(const NarainCoords& n) {
    validate(n);
    LcsReport r;
    r.rho = reduce_sl2(n.tau).rho;
    r.u_tilde_2 = n.u_tilde.im();
    // rho is rational and 2/sqrt 3 is not, so an exact tie cannot occur; ties would go to RHO.
    r.binding = cmp_sq_threshold(r.rho, 4, 3) == std::strong_ordering::less ? Binding::TwoOverSqrt3 : Binding::Rho;
    r.is_lcs = r.u_tilde_2 > r.rho && cmp_sq_threshold(r.u_tilde_2, 4, 3) == std::strong_ordering::greater;
    const double bound = r.binding == Binding::Rho ? r.rho.to_double() : 2.0 / std::sqrt(3.0);
    r.disc_radius_approx = std::exp(-2.0 * std::numbers::pi * bound);
    return r;
}

BasisInvariants tau_u2_from_basis(const PeriodVector& p, const LatticeElement& y1p, const LatticeElement& y2p) {
    if (!is_primitive_isotropic_rank2({{y1p, y2p}, p.frame})) {
        throw Error(ErrorKind::InvalidBasis, "primitive-isotropic-rank-2", "basis does not span a primitive isotropic plane");
    }
    validate_period(p);
    GaussianRational t1 = pair(p, y1p);
    GaussianRational t2 = pair(p, y2p);
    if (t2.is_zero()) {
        throw Error(ErrorKind::DegeneratePeriod, "<omega,y2'>!=0", "period pairs to zero with y2'");
    }
    BasisInvariants out;
    out.tau = t1 / t2;
    if (out.tau.im().sign() == 0) {
        throw Error(ErrorKind::InvalidBasis, "Im(tau)!=0", "period restricted to the plane is degenerate");
    }
    if (out.tau.im().sign() < 0) {
        out.tau = -out.tau;
        out.reoriented = true;
    }
    GaussianRational h = pair(p, p.conj());
    out.u2_literal = h.re() / (abs_sq(t2) * out.tau.im());
    if (!out.reoriented && y1p == LatticeElement::y1() && y2p == LatticeElement::y2()) {
        out.narain_u2 = narain_from_omega(p).u_tilde.im();
    }
    return out;
}

Lemma1Report lemma1_gap(const PeriodVector& p, const LatticeElement& r) {
    Lemma1Report rep;
    rep.a1 = r.a[0];  // <r, y1>
    rep.a2 = r.a[1];  // <r, y2>
    if (rep.a1 == 0 && rep.a2 == 0) {
        throw Error(ErrorKind::Precondition, "r not in V^perp", "lemma requires (a1, a2) != (0, 0)");
    }
    const Frame& frame = Frame::get(p.frame);
    PeriodVector w = normalize(p);
    NarainCoords n = narain_from_omega(w);
    const GaussianRational& tau = n.tau;
    const Rational& tau2 = tau.im();
    const Rational u2 = n.u_tilde.im();
    const GaussianRational big_a = pair(w, r);
    const GaussianRational lin = GaussianRational(rep.a2) * tau - GaussianRational(rep.a1);
    const Rational d = abs_sq(lin);  // > 0 since tau is not real
    const Rational rr(pair(r, r, frame));
    const Rational k = rr * tau2 / Rational(2);

    // sqrt(P) - k / sqrt(D) - sqrt(D) u2 has the sign of sqrt(P D) - (k + D u2).
    const Rational pd = abs_sq(big_a) * d;
    const Rational m = k + d * u2;
    if (m.sign() < 0) {
        rep.lemma_sign = 1;
    } else {
        auto c = pd <=> m * m;
        rep.lemma_sign = c == std::strong_ordering::greater ? 1 : (c == std::strong_ordering::less ? -1 : 0);
    }
    const long double sd = std::sqrt(d.to_long_double());
    rep.lemma_gap_approx = static_cast<double>(std::sqrt(abs_sq(big_a).to_long_double()) - k.to_long_double() / sd -
                                               sd * u2.to_long_double());
    if (rep.lemma_sign == 0) rep.lemma_gap_approx = 0.0;

    const GaussianRational ratio = big_a / lin;
    rep.remark_gap = ratio.im().abs() - rr * tau2 / (Rational(2) * d) - u2;
    return rep;
}

}  // namespace k3lcs
