#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "k3lcs/intmat.hpp"
#include "k3lcs/lattice.hpp"
#include "k3lcs/mat2.hpp"
#include "k3lcs/period.hpp"

namespace k3lcs {

/// An element gamma(m, Q, R, f) of the stabilizer of V = span(y1, y2), acting on column vectors
/// (a, b, c) by
///
///     | m     0     0   |
///     | R     m~   -Q f |      m~ = (m^T)^{-1},  Q(c) = ((c, c1), (c, c2)),
///     | Q* m  0     f   |      Q*(x) = x1 c1 + x2 c2 (adjoint of Q).
///
/// Validity: det m = +-1 (+1 for P+), f in O(Lambda), R^T m + m^T R + m^T (Q Q*) m = 0.
class ParabolicIsometry {
public:
    ParabolicIsometry() = default;

    FrameKind frame() const { return frame_; }
    const Mat2& m() const { return m_; }
    const Mat2& r() const { return r_; }
    /// 2x16 matrix of Q: row i is (G c_i)^T.
    const IntMatrix& q() const { return q_; }
    const IntMatrix& f() const { return f_; }
    const LambdaVector& c1() const { return c_[0]; }
    const LambdaVector& c2() const { return c_[1]; }

    /// The 20x20 integer matrix in (a1, a2, b1, b2, c) coordinates.
    IntMatrix matrix() const;

    bool is_identity() const;

    friend bool operator==(const ParabolicIsometry& x, const ParabolicIsometry& y) {
        return x.frame_ == y.frame_ && x.m_ == y.m_ && x.r_ == y.r_ && x.q_ == y.q_ && x.f_ == y.f_;
    }

private:
    friend ParabolicIsometry make_parabolic(FrameKind, const Mat2&, const IntMatrix&, const Mat2&, const IntMatrix&,
                                            bool);
    FrameKind frame_ = FrameKind::E8E8;
    Mat2 m_;
    Mat2 r_ = Mat2::zero();
    IntMatrix q_;
    IntMatrix f_;
    std::array<LambdaVector, 2> c_{};
};

/// Validates every invariant, reporting each failure with its own ErrorKind. Elements with det m = -1
/// lie in P but not P+ and are rejected unless `allow_improper` is set.
ParabolicIsometry make_parabolic(FrameKind frame, const Mat2& m, const IntMatrix& q, const Mat2& r, const IntMatrix& f,
                                 bool allow_improper = false);

/// Same, with Q given by the vectors c1, c2 of Lambda.
ParabolicIsometry make_parabolic_from_vectors(FrameKind frame, const Mat2& m, const LambdaVector& c1,
                                              const LambdaVector& c2, const Mat2& r, const IntMatrix& f,
                                              bool allow_improper = false);

ParabolicIsometry parabolic_identity(FrameKind frame);
/// gamma(m, 0, 0, I).
ParabolicIsometry sl2_element(FrameKind frame, const Mat2& m);
/// gamma(I, 0, 0, f).
ParabolicIsometry orthogonal_element(FrameKind frame, const IntMatrix& f);
/// gamma(I, Q, R, I) with Q from (c1, c2); r11, r22 and r21 are forced by the R/Q condition.
ParabolicIsometry heisenberg_element(FrameKind frame, const LambdaVector& c1, const LambdaVector& c2, std::int64_t r12);

/// Reads a 20x20 matrix as gamma(m, Q, R, f); throws ErrorKind::NotBlockParabolic if the block shape is wrong.
ParabolicIsometry parabolic_from_matrix(FrameKind frame, const IntMatrix& matrix, bool allow_improper = false);

/// Closed-form composition g1 o g2.
ParabolicIsometry compose(const ParabolicIsometry& g1, const ParabolicIsometry& g2);
ParabolicIsometry inverse(const ParabolicIsometry& g);

/// gamma(m, Q, R, f) = gamma(I, Q, R m^{-1}, I) o gamma(m, 0, 0, I) o gamma(I, 0, 0, f).
struct ParabolicFactors {
    ParabolicIsometry heisenberg;
    ParabolicIsometry sl2;
    ParabolicIsometry orthogonal;
};
ParabolicFactors decompose(const ParabolicIsometry& g);

/// An arbitrary integral isometry of L, as a 20x20 matrix.
class GeneralIsometry {
public:
    static GeneralIsometry make(FrameKind frame, IntMatrix matrix);
    FrameKind frame() const { return frame_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    GeneralIsometry(FrameKind frame, IntMatrix matrix) : frame_(frame), matrix_(std::move(matrix)) {}
    FrameKind frame_;
    IntMatrix matrix_;
};

/// Exchanges span(x1, x2) with span(y1, y2): (a)(b)(c) -> (b)(a)(c).
GeneralIsometry h_block_swap(FrameKind frame);

LatticeElement apply(const IntMatrix& matrix, const LatticeElement& e);
/// Applies the isometry to omega and renormalizes to <omega, y2> = 1.
PeriodVector act_on_period(const ParabolicIsometry& g, const PeriodVector& p);
PeriodVector act_on_period(const GeneralIsometry& g, const PeriodVector& p);

/// Action on Narain coordinates through the closed forms for each factor of decompose(g).
NarainCoords narain_transform(const ParabolicIsometry& g, const NarainCoords& n);

enum class GeneratorClass { SL2, Orthogonal, Heisenberg };

struct SampleBounds {
    int word_length = 4;     // S/T letters in an SL(2,Z) word
    int reflections = 3;     // root reflections in an O(Lambda) element
    int entry = 1;           // coordinate range of c1, c2 and r12
    int product_length = 3;  // generators in a mixed product
};

ParabolicIsometry sample_generator(FrameKind frame, GeneratorClass cls, std::mt19937_64& rng, const SampleBounds& bounds);

/// Deterministic per seed. Seed 0 is the identity; otherwise seed % 4 selects a mixed product (0) or a
/// pure SL(2,Z) (1), O(Lambda) (2) or Heisenberg (3) element.
ParabolicIsometry sample_parabolic(FrameKind frame, std::uint64_t seed, const SampleBounds& bounds = {});

/// G^{-1} for the Lambda Gram of the frame (integral, Lambda is unimodular).
const IntMatrix& lambda_gram_inverse(FrameKind frame);

}  // namespace k3lcs
