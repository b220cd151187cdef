#pragma once

#include <cstdint>
#include <random>

#include "k3lcs/lattice.hpp"
#include "k3lcs/mat2.hpp"
#include "k3lcs/period.hpp"

namespace k3lcs::sampling {

using Rng = std::mt19937_64;

/// p/q with |p| <= num_bound and 1 <= q <= den_bound.
Rational rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound);
/// Strictly positive p/q with 1 <= p <= num_bound.
Rational positive_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound);

GaussianRational upper_half_plane(Rng& rng);

/// z with a few nonzero small rational entries.
ComplexLambda small_z(Rng& rng, int nonzero = 3);

/// Random valid Narain point; im(u_tilde) is chosen large enough for the chart to be valid.
NarainCoords narain_point(Rng& rng, FrameKind frame);
/// Random Narain point passing lcs_test.
NarainCoords lcs_point(Rng& rng, FrameKind frame);

/// Word in S and T^k of the given maximal length.
Mat2 sl2_word(Rng& rng, int max_length);

/// Random element of L with small coordinates.
LatticeElement lattice_element(Rng& rng, std::int64_t bound);

}  // namespace k3lcs::sampling
