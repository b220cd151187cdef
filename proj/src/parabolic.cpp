#include "k3lcs/parabolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "k3lcs/error.hpp"

namespace k3lcs {

namespace {

IntMatrix to_matrix(const Mat2& m) { return IntMatrix{{m.a, m.b}, {m.c, m.d}}; }

Mat2 to_mat2(const IntMatrix& x) { return {x.at64(0, 0), x.at64(0, 1), x.at64(1, 0), x.at64(1, 1)}; }

// 16x2 matrix of Q*, columns c1 and c2.
IntMatrix q_star(const ParabolicIsometry& g) {
    IntMatrix out(kLambdaRank, 2);
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        out(i, 0) = g.c1()[i];
        out(i, 1) = g.c2()[i];
    }
    return out;
}

IntMatrix q_from_vectors(const Frame& frame, const LambdaVector& c1, const LambdaVector& c2) {
    IntMatrix q(2, kLambdaRank);
    LambdaVector g1 = frame.lambda_form(c1);
    LambdaVector g2 = frame.lambda_form(c2);
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        q(0, i) = g1[i];
        q(1, i) = g2[i];
    }
    return q;
}

// f^{-1} = G^{-1} f^T G for f in O(Lambda).
IntMatrix isometry_inverse(FrameKind kind, const IntMatrix& f) {
    return lambda_gram_inverse(kind) * f.transpose() * Frame::get(kind).lambda_gram();
}

}  // namespace

const IntMatrix& lambda_gram_inverse(FrameKind frame) {
    static std::mutex mu;
    static std::map<FrameKind, IntMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(frame);
    if (it == cache.end()) {
        it = cache.emplace(frame, unimodular_inverse(Frame::get(frame).lambda_gram())).first;
    }
    return it->second;
}

IntMatrix ParabolicIsometry::matrix() const {
    IntMatrix out(kLatticeRank, kLatticeRank);
    out.set_block(0, 0, to_matrix(m_));
    out.set_block(2, 0, to_matrix(r_));
    out.set_block(2, 2, to_matrix(m_.inverse_transpose()));
    out.set_block(2, 4, -(q_ * f_));
    out.set_block(4, 0, q_star(*this) * to_matrix(m_));
    out.set_block(4, 4, f_);
    return out;
}

bool ParabolicIsometry::is_identity() const {
    return m_ == Mat2::identity() && r_ == Mat2::zero() && q_.is_zero() && f_ == IntMatrix::identity(kLambdaRank);
}

ParabolicIsometry make_parabolic(FrameKind frame, const Mat2& m, const IntMatrix& q, const Mat2& r, const IntMatrix& f,
                                 bool allow_improper) {
    if (q.rows() != 2 || q.cols() != kLambdaRank || f.rows() != kLambdaRank || f.cols() != kLambdaRank) {
        throw Error(ErrorKind::Precondition, "shape", "Q must be 2x16 and f 16x16");
    }
    std::int64_t det = m.det();
    if (det != 1 && det != -1) {
        throw Error(ErrorKind::Precondition, "det(m)=+-1", "m is not in GL(2,Z)");
    }
    if (det == -1 && !allow_improper) {
        throw Error(ErrorKind::NotInPPlus, "det(m)=1", "det m = -1: element lies in P but not in P+");
    }
    const Frame& fr = Frame::get(frame);
    const IntMatrix& g = fr.lambda_gram();
    if (!(f.transpose() * g * f == g)) {
        throw Error(ErrorKind::NotLatticeIsometry, "f^T G f = G", "f does not preserve the Lambda pairing");
    }

    ParabolicIsometry out;
    out.frame_ = frame;
    out.m_ = m;
    out.r_ = r;
    out.q_ = q;
    out.f_ = f;
    IntMatrix cs = lambda_gram_inverse(frame) * q.transpose();  // 16x2, columns c1, c2
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        out.c_[0][i] = cs.at64(i, 0);
        out.c_[1][i] = cs.at64(i, 1);
    }

    IntMatrix mm = to_matrix(m);
    IntMatrix rr = to_matrix(r);
    IntMatrix cond = rr.transpose() * mm + mm.transpose() * rr + mm.transpose() * (q * q_star(out)) * mm;
    if (!cond.is_zero()) {
        throw Error(ErrorKind::RqConditionFailed, "R^T m + m^T R + m^T Q Q* m = 0",
                    "R and Q violate the isotropy condition");
    }
    IntMatrix full = out.matrix();
    IntMatrix gl = fr.lattice_gram();
    if (!(full.transpose() * gl * full == gl)) {
        throw Error(ErrorKind::GramNotPreserved, "M^T G_L M = G_L", "matrix does not preserve the pairing on L");
    }
    return out;
}

ParabolicIsometry make_parabolic_from_vectors(FrameKind frame, const Mat2& m, const LambdaVector& c1,
                                              const LambdaVector& c2, const Mat2& r, const IntMatrix& f,
                                              bool allow_improper) {
    return make_parabolic(frame, m, q_from_vectors(Frame::get(frame), c1, c2), r, f, allow_improper);
}

ParabolicIsometry parabolic_identity(FrameKind frame) { return sl2_element(frame, Mat2::identity()); }

ParabolicIsometry sl2_element(FrameKind frame, const Mat2& m) {
    return make_parabolic(frame, m, IntMatrix(2, kLambdaRank), Mat2::zero(), IntMatrix::identity(kLambdaRank), true);
}

ParabolicIsometry orthogonal_element(FrameKind frame, const IntMatrix& f) {
    return make_parabolic(frame, Mat2::identity(), IntMatrix(2, kLambdaRank), Mat2::zero(), f);
}

ParabolicIsometry heisenberg_element(FrameKind frame, const LambdaVector& c1, const LambdaVector& c2,
                                     std::int64_t r12) {
    const Frame& fr = Frame::get(frame);
    std::int64_t n11 = fr.lambda_pair(c1, c1);
    std::int64_t n22 = fr.lambda_pair(c2, c2);
    std::int64_t n12 = fr.lambda_pair(c1, c2);
    Mat2 r{-n11 / 2, r12, -n12 - r12, -n22 / 2};
    return make_parabolic_from_vectors(frame, Mat2::identity(), c1, c2, r, IntMatrix::identity(kLambdaRank));
}

ParabolicIsometry parabolic_from_matrix(FrameKind frame, const IntMatrix& matrix, bool allow_improper) {
    if (matrix.rows() != kLatticeRank || matrix.cols() != kLatticeRank) {
        throw Error(ErrorKind::NotBlockParabolic, "20x20", "isometry matrix must be 20x20");
    }
    if (!matrix.block(0, 2, 2, 18).is_zero() || !matrix.block(4, 2, 16, 2).is_zero()) {
        throw Error(ErrorKind::NotBlockParabolic, "stabilizes span(y1,y2)",
                    "matrix does not preserve the plane span(y1, y2)");
    }
    Mat2 m = to_mat2(matrix.block(0, 0, 2, 2));
    std::int64_t det = m.det();
    if (det != 1 && det != -1) {
        throw Error(ErrorKind::NotBlockParabolic, "det(m)=+-1", "upper-left block is not in GL(2,Z)");
    }
    Mat2 r = to_mat2(matrix.block(2, 0, 2, 2));
    IntMatrix f = matrix.block(4, 4, 16, 16);
    const IntMatrix& g = Frame::get(frame).lambda_gram();
    if (!(f.transpose() * g * f == g)) {
        throw Error(ErrorKind::NotLatticeIsometry, "f^T G f = G", "f does not preserve the Lambda pairing");
    }
    IntMatrix q = -(matrix.block(2, 4, 2, 16) * isometry_inverse(frame, f));
    ParabolicIsometry out = make_parabolic(frame, m, q, r, f, allow_improper);
    if (!(out.matrix() == matrix)) {
        throw Error(ErrorKind::NotBlockParabolic, "block form", "matrix is not of the form gamma(m, Q, R, f)");
    }
    return out;
}

ParabolicIsometry compose(const ParabolicIsometry& g1, const ParabolicIsometry& g2) {
    if (g1.frame() != g2.frame()) {
        throw Error(ErrorKind::Precondition, "same frame", "cannot compose isometries of different frames");
    }
    FrameKind frame = g1.frame();
    IntMatrix mt1 = to_matrix(g1.m().inverse_transpose());
    IntMatrix m2 = to_matrix(g2.m());
    IntMatrix f1 = g1.f();
    IntMatrix q = g1.q() + mt1 * g2.q() * isometry_inverse(frame, f1);
    IntMatrix r = to_matrix(g1.r()) * m2 + mt1 * to_matrix(g2.r()) + -(g1.q() * f1 * q_star(g2) * m2);
    return make_parabolic(frame, g1.m() * g2.m(), q, to_mat2(r), f1 * g2.f(), true);
}

ParabolicIsometry inverse(const ParabolicIsometry& g) {
    return parabolic_from_matrix(g.frame(), unimodular_inverse(g.matrix()), true);
}

ParabolicFactors decompose(const ParabolicIsometry& g) {
    FrameKind frame = g.frame();
    Mat2 r = g.r() * g.m().inverse();
    return {make_parabolic(frame, Mat2::identity(), g.q(), r, IntMatrix::identity(kLambdaRank)),
            sl2_element(frame, g.m()), orthogonal_element(frame, g.f())};
}

GeneralIsometry GeneralIsometry::make(FrameKind frame, IntMatrix matrix) {
    if (matrix.rows() != kLatticeRank || matrix.cols() != kLatticeRank) {
        throw Error(ErrorKind::Precondition, "20x20", "isometry matrix must be 20x20");
    }
    IntMatrix gl = Frame::get(frame).lattice_gram();
    if (!(matrix.transpose() * gl * matrix == gl)) {
        throw Error(ErrorKind::GramNotPreserved, "M^T G_L M = G_L", "matrix does not preserve the pairing on L");
    }
    return GeneralIsometry(frame, std::move(matrix));
}

GeneralIsometry h_block_swap(FrameKind frame) {
    IntMatrix m = IntMatrix::identity(kLatticeRank);
    for (std::size_t i = 0; i < 2; ++i) {
        m(i, i) = 0;
        m(i + 2, i + 2) = 0;
        m(i, i + 2) = 1;
        m(i + 2, i) = 1;
    }
    return GeneralIsometry::make(frame, std::move(m));
}

LatticeElement apply(const IntMatrix& matrix, const LatticeElement& e) {
    auto v = e.coords();
    std::vector<Integer> out(kLatticeRank);
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < kLatticeRank; ++j) {
            if (v[j] != 0) s += matrix(i, j) * Integer(static_cast<long>(v[j]));
        }
        out[i] = s;
    }
    return LatticeElement::from_coords(out);
}

namespace {

PeriodVector apply_matrix(const IntMatrix& matrix, FrameKind frame, const PeriodVector& p) {
    std::array<GaussianRational, kLatticeRank> v;
    v[0] = p.a[0];
    v[1] = p.a[1];
    v[2] = p.b[0];
    v[3] = p.b[1];
    for (std::size_t i = 0; i < kLambdaRank; ++i) v[4 + i] = p.c[i];
    std::array<GaussianRational, kLatticeRank> w;
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
        Rational re, im;
        for (std::size_t j = 0; j < kLatticeRank; ++j) {
            const Integer& x = matrix(i, j);
            if (x == 0 || v[j].is_zero()) continue;
            re += Rational(x) * v[j].re();
            im += Rational(x) * v[j].im();
        }
        w[i] = GaussianRational(re, im);
    }
    PeriodVector q;
    q.frame = frame;
    q.a = {w[0], w[1]};
    q.b = {w[2], w[3]};
    for (std::size_t i = 0; i < kLambdaRank; ++i) q.c[i] = w[4 + i];
    return q;
}

PeriodVector act(const IntMatrix& matrix, FrameKind frame, const PeriodVector& p) {
    if (p.frame != frame) {
        throw Error(ErrorKind::Precondition, "same frame", "isometry and period belong to different frames");
    }
    validate_period(p);
    PeriodVector q = normalize(apply_matrix(matrix, frame, p));
    tube_from_omega(q);  // rejects the conjugate component
    return q;
}

}  // namespace

PeriodVector act_on_period(const ParabolicIsometry& g, const PeriodVector& p) {
    return act(g.matrix(), g.frame(), p);
}

PeriodVector act_on_period(const GeneralIsometry& g, const PeriodVector& p) {
    return act(g.matrix(), g.frame(), p);
}

NarainCoords narain_transform(const ParabolicIsometry& g, const NarainCoords& n) {
    validate(n);
    if (g.frame() != n.frame) {
        throw Error(ErrorKind::Precondition, "same frame", "isometry and coordinates belong to different frames");
    }
    if (g.m().det() != 1) {
        throw Error(ErrorKind::NotInPPlus, "det(m)=1", "Narain action requires an element of P+");
    }
    const Frame& frame = Frame::get(n.frame);
    GaussianRational tau = n.tau;
    GaussianRational ut = n.u_tilde;

    // f: z -> f z
    ComplexLambda z;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        Rational re, im;
        for (std::size_t j = 0; j < kLambdaRank; ++j) {
            const Integer& x = g.f()(i, j);
            if (x == 0 || n.z[j].is_zero()) continue;
            re += Rational(x) * n.z[j].re();
            im += Rational(x) * n.z[j].im();
        }
        z[i] = GaussianRational(re, im);
    }

    // m: tau -> m.tau, z -> z / (c tau + d), u_tilde fixed
    const Mat2& m = g.m();
    GaussianRational j = GaussianRational(m.c) * tau + GaussianRational(m.d);
    tau = mobius(m, tau);
    for (auto& x : z) x = x / j;

    // Heisenberg part gamma(I, Q, R m^{-1}, I)
    Mat2 r = g.r() * m.inverse();
    const LambdaVector& c1 = g.c1();
    const LambdaVector& c2 = g.c2();
    ComplexLambda shift;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        shift[i] = tau * GaussianRational(c1[i]) + GaussianRational(c2[i]);
    }
    ComplexLambda z2 = imag_part(z);
    GaussianRational two(2);
    ut = ut + GaussianRational(r.b) + GaussianRational(Rational(frame.lambda_pair(c1, c2), 2)) -
         lambda_pair(frame, z, c1) / two + lambda_pair(frame, shift, z2) / GaussianRational(two.re() * tau.im());
    for (std::size_t i = 0; i < kLambdaRank; ++i) z[i] += shift[i];

    NarainCoords out{tau, ut, z, n.frame};
    validate(out);
    return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntMatrix reflection(const Frame& frame, const LambdaVector& r) {
    // x -> x + (x, r) r, since (r, r) = -2
    IntMatrix out = IntMatrix::identity(kLambdaRank);
    LambdaVector gr = frame.lambda_form(r);
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        if (r[i] == 0) continue;
        for (std::size_t j = 0; j < kLambdaRank; ++j) out(i, j) += Integer(static_cast<long>(r[i] * gr[j]));
    }
    return out;
}

}  // namespace

ParabolicIsometry sample_generator(FrameKind frame, GeneratorClass cls, std::mt19937_64& rng,
                                   const SampleBounds& bounds) {
    const Frame& fr = Frame::get(frame);
    switch (cls) {
        case GeneratorClass::SL2: {
            Mat2 m = Mat2::identity();
            int len = static_cast<int>(uniform(rng, 1, std::max(1, bounds.word_length)));
            for (int i = 0; i < len; ++i) {
                if (uniform(rng, 0, 1) == 0) {
                    m = m * Mat2::s();
                } else {
                    std::int64_t k = uniform(rng, -2, 2);
                    m = m * Mat2::t(k == 0 ? 1 : k);
                }
            }
            return sl2_element(frame, m);
        }
        case GeneratorClass::Orthogonal: {
            const auto& roots = fr.lambda_roots();
            IntMatrix f = IntMatrix::identity(kLambdaRank);
            int len = static_cast<int>(uniform(rng, 1, std::max(1, bounds.reflections)));
            for (int i = 0; i < len; ++i) {
                const auto& r = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(roots.size()) - 1))];
                f = f * reflection(fr, r);
            }
            if (uniform(rng, 0, 3) == 0) f = -f;
            return orthogonal_element(frame, f);
        }
        case GeneratorClass::Heisenberg: {
            LambdaVector c1{}, c2{};
            for (std::size_t i = 0; i < kLambdaRank; ++i) {
                c1[i] = uniform(rng, -bounds.entry, bounds.entry);
                c2[i] = uniform(rng, -bounds.entry, bounds.entry);
            }
            return heisenberg_element(frame, c1, c2, uniform(rng, -bounds.entry, bounds.entry));
        }
    }
    throw Error(ErrorKind::Precondition, "generator class", "unknown generator class");
}

ParabolicIsometry sample_parabolic(FrameKind frame, std::uint64_t seed, const SampleBounds& bounds) {
    if (seed == 0) return parabolic_identity(frame);
    std::mt19937_64 rng(seed);
    switch (seed % 4) {
        case 1: return sample_generator(frame, GeneratorClass::SL2, rng, bounds);
        case 2: return sample_generator(frame, GeneratorClass::Orthogonal, rng, bounds);
        case 3: return sample_generator(frame, GeneratorClass::Heisenberg, rng, bounds);
        default: break;
    }
    ParabolicIsometry g = parabolic_identity(frame);
    int len = static_cast<int>(uniform(rng, 2, std::max(2, bounds.product_length)));
    for (int i = 0; i < len; ++i) {
        auto cls = static_cast<GeneratorClass>(uniform(rng, 0, 2));
        g = compose(g, sample_generator(frame, cls, rng, bounds));
    }
    return g;
}

}  // namespace k3lcs
