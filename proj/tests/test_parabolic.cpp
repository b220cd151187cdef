#include <doctest.h>

#include "k3lcs/error.hpp"
#include "k3lcs/parabolic.hpp"
#include "k3lcs/sampling.hpp"

using namespace k3lcs;

namespace {

GaussianRational gi(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Internal;
}

const LambdaVector& root(FrameKind k) { return Frame::get(k).lambda_roots().front(); }

// Swaps the two E8 summands of the E8+E8 frame.
IntMatrix summand_swap() {
    IntMatrix f(kLambdaRank, kLambdaRank);
    for (std::size_t i = 0; i < 8; ++i) {
        f(i, i + 8) = 1;
        f(i + 8, i) = 1;
    }
    return f;
}

}  // namespace

TEST_CASE("construction and validation") {
    const FrameKind k = FrameKind::E8E8;
    ParabolicIsometry id = parabolic_identity(k);
    CHECK(id.is_identity());
    CHECK(id.matrix() == IntMatrix::identity(kLatticeRank));

    ParabolicIsometry s = sl2_element(k, Mat2::s());
    CHECK(s.m() == Mat2::s());
    CHECK(s.matrix().transpose() * Frame::e8e8().lattice_gram() * s.matrix() == Frame::e8e8().lattice_gram());

    // c1 a root but R = 0 violates the R/Q condition (r11 must be 1).
    IntMatrix q(2, kLambdaRank);
    LambdaVector form = Frame::e8e8().lambda_form(root(k));
    for (std::size_t j = 0; j < kLambdaRank; ++j) q(0, j) = form[j];
    const IntMatrix id16 = IntMatrix::identity(kLambdaRank);
    CHECK(kind_of([&] { make_parabolic(k, Mat2::identity(), q, Mat2::zero(), id16); }) ==
          ErrorKind::RqConditionFailed);
    CHECK_NOTHROW(make_parabolic(k, Mat2::identity(), q, Mat2{1, 0, 0, 0}, id16));

    CHECK(kind_of([&] { make_parabolic(k, Mat2{1, 0, 0, -1}, IntMatrix(2, kLambdaRank), Mat2::zero(), id16); }) ==
          ErrorKind::NotInPPlus);
    CHECK_NOTHROW(make_parabolic(k, Mat2{1, 0, 0, -1}, IntMatrix(2, kLambdaRank), Mat2::zero(), id16, true));
    CHECK(kind_of([&] { make_parabolic(k, Mat2{2, 0, 0, 1}, IntMatrix(2, kLambdaRank), Mat2::zero(), id16); }) ==
          ErrorKind::Precondition);

    IntMatrix bad = id16;
    bad(0, 1) = 1;
    CHECK(kind_of([&] { orthogonal_element(k, bad); }) == ErrorKind::NotLatticeIsometry);
    CHECK_NOTHROW(orthogonal_element(k, summand_swap()));
    CHECK_NOTHROW(orthogonal_element(k, -id16));

    IntMatrix g = IntMatrix::identity(kLatticeRank);
    g(0, 2) = 1;
    CHECK(kind_of([&] { GeneralIsometry::make(k, g); }) == ErrorKind::GramNotPreserved);
    CHECK(kind_of([&] { parabolic_from_matrix(k, h_block_swap(k).matrix()); }) == ErrorKind::NotBlockParabolic);
}

TEST_CASE("S acts on tau by -1/tau") {
    PeriodVector w = omega_from_tube({gi(0, 2), gi(0, 1), {}, FrameKind::E8E8});
    TubeCoords t = tube_from_omega(act_on_period(sl2_element(FrameKind::E8E8, Mat2::s()), w));
    CHECK(t.tau == GaussianRational(Rational(0), Rational(1, 2)));
}

TEST_CASE("the unipotent element W shifts u by one") {
    const FrameKind k = FrameKind::D16Plus;
    ParabolicIsometry wel =
        make_parabolic(k, Mat2::identity(), IntMatrix(2, kLambdaRank), Mat2{0, 1, -1, 0}, IntMatrix::identity(16));
    sampling::Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        NarainCoords n = sampling::narain_point(rng, k);
        NarainCoords m = narain_from_omega(act_on_period(wel, omega_from_narain(n)));
        CHECK(m.tau == n.tau);
        CHECK(m.z == n.z);
        CHECK(m.u_tilde == n.u_tilde + gi(1, 0));
        CHECK(narain_transform(wel, n) == m);
    }
    ParabolicIsometry s = sl2_element(k, Mat2::s());
    CHECK(compose(s, wel) == compose(wel, s));
}

TEST_CASE("Heisenberg element at the origin") {
    // Oracle (tools/oracles.py): c1 a root, c2 = 0, r12 = 0 at tau = i, u = 3i, z = 0
    // leaves u_tilde = 3i and moves z to i c1.
    for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
        ParabolicIsometry h = heisenberg_element(k, root(k), LambdaVector{}, 0);
        NarainCoords n{gi(0, 1), gi(0, 3), {}, k};
        NarainCoords m = narain_from_omega(act_on_period(h, omega_from_narain(n)));
        CHECK(m.tau == n.tau);
        CHECK(m.u_tilde == gi(0, 3));
        for (std::size_t j = 0; j < kLambdaRank; ++j) CHECK(m.z[j] == gi(0, root(k)[j]));
        CHECK(narain_transform(h, n) == m);
    }
}

TEST_CASE("Heisenberg elements form a normal subgroup") {
    for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
        sampling::Rng rng(31);
        for (int i = 0; i < 20; ++i) {
            ParabolicIsometry g = sample_parabolic(k, 100 + i);
            ParabolicIsometry h = sample_generator(k, GeneratorClass::Heisenberg, rng, {});
            ParabolicIsometry c = compose(compose(g, h), inverse(g));
            CHECK(c.m() == Mat2::identity());
            CHECK(c.f() == IntMatrix::identity(kLambdaRank));
            ParabolicIsometry h2 = sample_generator(k, GeneratorClass::Heisenberg, rng, {});
            ParabolicIsometry p = compose(h, h2);
            CHECK(p.m() == Mat2::identity());
            CHECK(p.f() == IntMatrix::identity(kLambdaRank));
        }
    }
}

TEST_CASE("composition, inverse and decomposition agree with matrices") {
    for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
        const IntMatrix gram = Frame::get(k).lattice_gram();
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            ParabolicIsometry g1 = sample_parabolic(k, seed);
            ParabolicIsometry g2 = sample_parabolic(k, seed + 1000);
            ParabolicIsometry g = compose(g1, g2);
            CHECK(g.matrix() == g1.matrix() * g2.matrix());
            CHECK(g.matrix().transpose() * gram * g.matrix() == gram);
            CHECK(parabolic_from_matrix(k, g.matrix()) == g);
            CHECK(compose(g, inverse(g)).is_identity());
            CHECK(compose(inverse(g), g).is_identity());
            ParabolicFactors d = decompose(g);
            CHECK(d.heisenberg.m() == Mat2::identity());
            CHECK(d.heisenberg.f() == IntMatrix::identity(kLambdaRank));
            CHECK(d.sl2.q().is_zero());
            CHECK(d.sl2.f() == IntMatrix::identity(kLambdaRank));
            CHECK(d.orthogonal.m() == Mat2::identity());
            CHECK(compose(d.heisenberg, compose(d.sl2, d.orthogonal)) == g);
        }
    }
}

TEST_CASE("action on periods") {
    for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
        sampling::Rng rng(5);
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            ParabolicIsometry g = sample_parabolic(k, seed);
            NarainCoords n = sampling::narain_point(rng, k);
            PeriodVector moved = act_on_period(g, omega_from_narain(n));
            NarainCoords m = narain_from_omega(moved);
            CHECK(narain_transform(g, n) == m);
            // Im u_tilde is invariant under the whole parabolic group.
            CHECK(m.u_tilde.im() == n.u_tilde.im());
            CHECK(m.tau == mobius(g.m(), n.tau));
        }
    }
}

TEST_CASE("sampling") {
    CHECK(sample_parabolic(FrameKind::E8E8, 0).is_identity());
    CHECK(sample_parabolic(FrameKind::E8E8, 17) == sample_parabolic(FrameKind::E8E8, 17));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
            ParabolicIsometry g = sample_parabolic(k, seed);
            CHECK(g.m().det() == 1);
            if (seed % 4 == 3) {
                CHECK(g.m() == Mat2::identity());
                CHECK(g.f() == IntMatrix::identity(kLambdaRank));
            }
            if (seed % 4 == 1) CHECK(g.q().is_zero());
            if (seed % 4 == 2) CHECK(g.m() == Mat2::identity());
            CHECK_NOTHROW(make_parabolic(k, g.m(), g.q(), g.r(), g.f()));
        }
    }
}

TEST_CASE("the block swap is an isometry outside P") {
    GeneralIsometry sw = h_block_swap(FrameKind::E8E8);
    CHECK(apply(sw.matrix(), LatticeElement::x1()) == LatticeElement::y1());
    CHECK(apply(sw.matrix(), LatticeElement::y2()) == LatticeElement::x2());
    PeriodVector w = omega_from_tube({gi(0, 1), gi(0, 2), {}, FrameKind::E8E8});
    TubeCoords t = tube_from_omega(act_on_period(sw, w));
    CHECK(t.tau.im().sign() > 0);
}
