#pragma once

#include <cstdint>
#include <ostream>

#include "k3lcs/scalars.hpp"

namespace k3lcs {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
    static constexpr Mat2 zero() { return {0, 0, 0, 0}; }
    static constexpr Mat2 s() { return {0, -1, 1, 0}; }
    static constexpr Mat2 t(std::int64_t n = 1) { return {1, n, 0, 1}; }

    constexpr std::int64_t det() const { return a * d - b * c; }
    constexpr Mat2 transpose() const { return {a, c, b, d}; }
    /// Inverse over Z; requires det = +-1.
    Mat2 inverse() const;
    /// (m^T)^{-1}.
    Mat2 inverse_transpose() const { return inverse().transpose(); }

    friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend constexpr Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Moebius action (a tau + b) / (c tau + d).
GaussianRational mobius(const Mat2& m, const GaussianRational& tau);

}  // namespace k3lcs
