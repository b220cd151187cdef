#include "k3lcs/intmat.hpp"

#include <algorithm>
#include <utility>

namespace k3lcs {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::Precondition, "rectangular", "ragged matrix literal");
        }
        for (auto v : r) data_.emplace_back(static_cast<long>(v));
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw Error(ErrorKind::Precondition, "rectangular", "ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

std::int64_t IntMatrix::at64(std::size_t r, std::size_t c) const {
    const Integer& v = (*this)(r, c);
    if (!v.fits_slong_p()) {
        throw Error(ErrorKind::NotInteger, "fits-int64", "matrix entry " + v.get_str() + " out of range");
    }
    return v.get_si();
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows64() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at64(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) {
        throw Error(ErrorKind::Precondition, "conformable", "matrix product dimension mismatch");
    }
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o(k, j) != 0) p(i, j) += a * o(k, j);
            }
        }
    }
    return p;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix n = *this;
    for (auto& v : n.data_) v = -v;
    return n;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error(ErrorKind::Precondition, "conformable", "matrix sum dimension mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::Precondition, "square", "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    Integer d = a(n - 1, n - 1);
    return sign < 0 ? Integer(-d) : d;
}

ColumnEchelon column_echelon(const IntMatrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(nc);
    std::size_t pivot = 0;

    // col_p <- s*col_p + t*col_j ; col_j <- (-b/g)*col_p + (a/g)*col_j
    auto combine = [&](IntMatrix& x, std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                       const Integer& bg, const Integer& ag) {
        for (std::size_t r = 0; r < x.rows(); ++r) {
            Integer xp = x(r, p);
            Integer xj = x(r, j);
            x(r, p) = s * xp + t * xj;
            x(r, j) = ag * xj - bg * xp;
        }
    };

    for (std::size_t r = 0; r < nr && pivot < nc; ++r) {
        for (std::size_t j = pivot + 1; j < nc; ++j) {
            if (h(r, j) == 0) continue;
            Integer a = h(r, pivot);
            Integer b = h(r, j);
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer ag = a / g;
            Integer bg = b / g;
            combine(h, pivot, j, s, t, bg, ag);
            combine(u, pivot, j, s, t, bg, ag);
        }
        if (h(r, pivot) != 0) {
            if (h(r, pivot) < 0) {
                for (std::size_t k = 0; k < nr; ++k) h(k, pivot) = -h(k, pivot);
                for (std::size_t k = 0; k < nc; ++k) u(k, pivot) = -u(k, pivot);
            }
            ++pivot;
        }
    }
    return {std::move(h), std::move(u), pivot};
}

std::size_t rank(const IntMatrix& m) { return column_echelon(m).rank; }

IntMatrix integer_kernel(const IntMatrix& m) {
    ColumnEchelon ce = column_echelon(m);
    const std::size_t n = m.cols();
    IntMatrix k(n - ce.rank, n);
    for (std::size_t i = ce.rank; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) k(i - ce.rank, r) = ce.transform(r, i);
    return k;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        bool done = false;
        while (!done) {
            std::size_t pr = nr, pc = nc;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j)
                    if (a(i, j) != 0 && (pr == nr || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == nr) {
                std::sort(diag.begin(), diag.end());
                return diag;
            }
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(t, j), a(pr, j));
            for (std::size_t i = 0; i < nr; ++i) std::swap(a(i, t), a(i, pc));

            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < nc; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < nr; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the whole trailing block.
            std::size_t bad_r = nr;
            for (std::size_t i = t + 1; i < nr && bad_r == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad_r = i;
                        break;
                    }
            if (bad_r == nr) {
                done = true;
            } else {
                for (std::size_t j = t; j < nc; ++j) a(t, j) += a(bad_r, j);
            }
        }
        diag.push_back(abs(a(t, t)));
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::Precondition, "square", "inverse of a non-square matrix");
    }
    ColumnEchelon ce = column_echelon(m);
    // M U = H with H lower triangular, positive diagonal; unimodular M forces H to be unitriangular.
    const std::size_t n = m.rows();
    if (ce.rank != n) {
        throw Error(ErrorKind::Precondition, "unimodular", "matrix is singular");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (ce.reduced(i, i) != 1) {
            throw Error(ErrorKind::Precondition, "unimodular", "matrix is not unimodular");
        }
    }
    // Solve H X = I by forward substitution; then M^{-1} = U X.
    IntMatrix x(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            Integer v = (i == c) ? 1 : 0;
            for (std::size_t k = 0; k < i; ++k) v -= ce.reduced(i, k) * x(k, c);
            x(i, c) = v;
        }
    }
    return ce.transform * x;
}

IntMatrix complete_to_basis(const IntMatrix& c) {
    ColumnEchelon ce = column_echelon(c);
    const std::size_t k = c.rows();
    const std::size_t n = c.cols();
    if (ce.rank != k) {
        throw Error(ErrorKind::Precondition, "independent-rows", "rows are linearly dependent");
    }
    for (auto d : elementary_divisors(c)) {
        if (d != 1) {
            throw Error(ErrorKind::Precondition, "primitive", "rows do not span a primitive sublattice");
        }
    }
    // C U = [H | 0] with H unimodular, so the rows of U^{-1} past k complete C.
    IntMatrix w = unimodular_inverse(ce.transform);
    return w.block(k, 0, n - k, n);
}

}  // namespace k3lcs
