#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "k3lcs/intmat.hpp"

namespace k3lcs {

inline constexpr std::size_t kLambdaRank = 16;
inline constexpr std::size_t kLatticeRank = 20;

using LambdaVector = std::array<std::int64_t, kLambdaRank>;
using IntVector = std::vector<std::int64_t>;

enum class FrameKind { E8E8, D16Plus };

std::string_view to_string(FrameKind kind);
/// Accepts "e8e8" / "d16plus" (case-insensitive) and the upper-case enum names.
FrameKind parse_frame_kind(std::string_view text);

/// One of the two standard frames L = (Z x1 + Z x2) + (Z y1 + Z y2) + Lambda, Lambda negative definite
/// even unimodular of rank 16. The 480 roots of Lambda are cached at construction.
class Frame {
public:
    static const Frame& get(FrameKind kind);
    static const Frame& e8e8() { return get(FrameKind::E8E8); }
    static const Frame& d16plus() { return get(FrameKind::D16Plus); }

    FrameKind kind() const { return kind_; }
    const IntMatrix& lambda_gram() const { return gram_; }
    std::int64_t lambda_gram_at(std::size_t i, std::size_t j) const { return fast_gram_[i][j]; }

    std::int64_t lambda_pair(const LambdaVector& c1, const LambdaVector& c2) const;
    /// Gram * c, the linear form (c, .) in coordinates.
    LambdaVector lambda_form(const LambdaVector& c) const;

    struct GramEntry {
        std::size_t i;
        std::size_t j;
        std::int64_t value;
    };
    /// Nonzero Gram entries, for sparse evaluation of the pairing.
    const std::vector<GramEntry>& gram_entries() const { return entries_; }

    /// Vectors c of Lambda with (c, c) = -2, in canonical order.
    const std::vector<LambdaVector>& lambda_roots() const { return roots_; }

    /// 20x20 Gram of L in the (a1, a2, b1, b2, c) coordinates.
    IntMatrix lattice_gram() const;

private:
    Frame(FrameKind kind, IntMatrix gram);
    FrameKind kind_;
    IntMatrix gram_;
    std::array<std::array<std::int64_t, kLambdaRank>, kLambdaRank> fast_gram_{};
    std::vector<GramEntry> entries_;
    std::vector<LambdaVector> roots_;
};

/// Negated Cartan matrix of E8 (the negative definite E8 lattice).
IntMatrix e8_gram();
/// Gram of Lambda for the given frame kind, built from scratch and validated.
IntMatrix lambda_gram(FrameKind kind);

/// An element (a1, a2)(b1, b2)(c) of L.
struct LatticeElement {
    std::array<std::int64_t, 2> a{};
    std::array<std::int64_t, 2> b{};
    LambdaVector c{};

    static LatticeElement x1() { return {{1, 0}, {0, 0}, {}}; }
    static LatticeElement x2() { return {{0, 1}, {0, 0}, {}}; }
    static LatticeElement y1() { return {{0, 0}, {1, 0}, {}}; }
    static LatticeElement y2() { return {{0, 0}, {0, 1}, {}}; }
    static LatticeElement from_lambda(const LambdaVector& c) { return {{0, 0}, {0, 0}, c}; }

    std::array<std::int64_t, kLatticeRank> coords() const;
    static LatticeElement from_coords(const std::array<std::int64_t, kLatticeRank>& v);
    static LatticeElement from_coords(const std::vector<Integer>& v);

    LatticeElement operator-() const;
    LatticeElement& operator+=(const LatticeElement& o);
    friend LatticeElement operator+(LatticeElement x, const LatticeElement& y) { return x += y; }
    friend LatticeElement operator*(std::int64_t k, LatticeElement x);

    friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
    friend auto operator<=>(const LatticeElement&, const LatticeElement&) = default;
};

/// <e1, e2> = a1 b1' + a2 b2' + b1 a1' + b2 a2' + (c, c').
std::int64_t pair(const LatticeElement& e1, const LatticeElement& e2, const Frame& frame);

/// All nonzero v with v^T G v <= bound for a positive definite integral G. Output is canonical:
/// representatives with first nonzero coordinate positive in lexicographic order, each followed by
/// its negation. Throws ErrorKind::Definiteness for non positive definite input.
std::vector<IntVector> enumerate_short_vectors(const IntMatrix& gram, std::int64_t bound);

/// Partition of indices 0..n-1 into connected components of the graph joining i and j when
/// `pairing(i, j) != 0`. Components are listed by smallest member.
std::vector<std::vector<std::size_t>> nonorthogonal_components(
    std::size_t n, const std::function<std::int64_t(std::size_t, std::size_t)>& pairing);

/// Distinguishes E8+E8 from D16+ by the component structure of the root system.
FrameKind classify_rank16(const IntMatrix& gram);

struct SublatticeBasis {
    std::vector<LatticeElement> generators;
    FrameKind frame = FrameKind::E8E8;
};

IntMatrix coordinate_matrix(const SublatticeBasis& v);

/// Saturated basis of {x in L : <x, v> = 0 for all generators v}.
SublatticeBasis orthogonal_complement(const SublatticeBasis& v);

bool is_primitive_isotropic_rank2(const SublatticeBasis& v);

/// Type of the quotient V^perp / V.
FrameKind classify_isotropic_plane(const SublatticeBasis& v);

/// Gram (16x16) of V^perp / V in a basis completing V inside V^perp. Requires a primitive isotropic plane.
IntMatrix isotropic_quotient_gram(const SublatticeBasis& v);

/// Randomized search for a primitive isotropic plane in `frame` whose quotient has type `target`.
/// Planes are span(y1, f) with f = 2 x2 + k y2 + c isotropic, i.e. Kneser 2-neighbours of Lambda.
std::optional<SublatticeBasis> search_isotropic_plane(FrameKind frame, FrameKind target, std::uint64_t seed,
                                                      int max_attempts = 200);

}  // namespace k3lcs
