#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "k3lcs/scalars.hpp"

namespace k3lcs {

/// Dense row-major matrix over Z with arbitrary-size entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::int64_t at64(std::size_t r, std::size_t c) const;
    std::vector<std::vector<std::int64_t>> to_rows64() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix& operator+=(const IntMatrix& o);
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }

    std::vector<Integer> row(std::size_t r) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Column-style Hermite reduction: returns (H, U) with M * U = H, U unimodular, and the
/// trailing cols() - rank(M) columns of H zero.
struct ColumnEchelon {
    IntMatrix reduced;
    IntMatrix transform;
    std::size_t rank = 0;
};
ColumnEchelon column_echelon(const IntMatrix& m);

/// Basis (as rows) of the saturated kernel {x in Z^n : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Given k primitive independent rows C (elementary divisors all 1), returns n - k rows W such that
/// the rows of C together with W form a basis of Z^n.
IntMatrix complete_to_basis(const IntMatrix& c);

}  // namespace k3lcs
