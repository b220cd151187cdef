#include "k3lcs/sampling.hpp"

namespace k3lcs::sampling {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Rational rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

Rational positive_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    return Rational(uniform(rng, 1, num_bound), uniform(rng, 1, den_bound));
}

GaussianRational upper_half_plane(Rng& rng) { return {rational(rng, 6, 5), positive_rational(rng, 8, 5)}; }

ComplexLambda small_z(Rng& rng, int nonzero) {
    ComplexLambda z;
    for (int k = 0; k < nonzero; ++k) {
        auto i = static_cast<std::size_t>(uniform(rng, 0, kLambdaRank - 1));
        z[i] = GaussianRational(rational(rng, 3, 4), rational(rng, 3, 4));
    }
    return z;
}

NarainCoords narain_point(Rng& rng, FrameKind frame) {
    GaussianRational tau = upper_half_plane(rng);
    ComplexLambda z = small_z(rng, static_cast<int>(uniform(rng, 0, 4)));
    GaussianRational ut(rational(rng, 6, 5), positive_rational(rng, 10, 4));
    return {tau, ut, z, frame};
}

NarainCoords lcs_point(Rng& rng, FrameKind frame) {
    NarainCoords n = narain_point(rng, frame);
    // Push im(u_tilde) past max(rho, 2/sqrt 3).
    Rational rho = reduce_sl2(n.tau).rho;
    Rational floor_bound = (rho > Rational(2) ? rho : Rational(2));
    n.u_tilde = GaussianRational(n.u_tilde.re(), floor_bound + positive_rational(rng, 5, 3));
    return n;
}

Mat2 sl2_word(Rng& rng, int max_length) {
    Mat2 m = Mat2::identity();
    int len = static_cast<int>(uniform(rng, 0, max_length));
    for (int i = 0; i < len; ++i) {
        if (uniform(rng, 0, 1) == 0) {
            m = m * Mat2::s();
        } else {
            std::int64_t k = uniform(rng, -3, 3);
            m = m * Mat2::t(k == 0 ? 1 : k);
        }
    }
    return m;
}

LatticeElement lattice_element(Rng& rng, std::int64_t bound) {
    LatticeElement e;
    for (auto& x : e.a) x = uniform(rng, -bound, bound);
    for (auto& x : e.b) x = uniform(rng, -bound, bound);
    for (auto& x : e.c) x = uniform(rng, -bound, bound);
    return e;
}

}  // namespace k3lcs::sampling
