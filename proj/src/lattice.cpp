#include "k3lcs/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <string>

namespace k3lcs {

std::string_view to_string(FrameKind kind) { return kind == FrameKind::E8E8 ? "e8e8" : "d16plus"; }

FrameKind parse_frame_kind(std::string_view text) {
    std::string t;
    for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "e8e8") return FrameKind::E8E8;
    if (t == "d16plus" || t == "d16+") return FrameKind::D16Plus;
    throw Error(ErrorKind::Parse, "frame", "unknown frame '" + std::string(text) + "' (expected e8e8 or d16plus)");
}

// ---------------------------------------------------------------------------------------------
// Gram matrices

IntMatrix e8_gram() {
    // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    static constexpr std::array<std::pair<int, int>, 7> kEdges{
        {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    for (auto [i, j] : kEdges) {
        g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
        g(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
    }
    return g;
}

namespace {

IntMatrix d16plus_gram() {
    // Generators of D16+ in doubled coordinates: e_i - e_{i+1}, e_15 + e_16, and (e_1 + ... + e_16)/2.
    constexpr std::size_t n = kLambdaRank;
    IntMatrix gens(n, n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gens(i, i) = 2;
        gens(i + 1, i) = -2;
    }
    gens(n - 2, n - 1) = 2;
    gens(n - 1, n - 1) = 2;
    for (std::size_t i = 0; i < n; ++i) gens(i, n) = 1;

    ColumnEchelon ce = column_echelon(gens);
    IntMatrix basis = ce.reduced.block(0, 0, n, n);  // columns are a Z-basis of the doubled lattice
    IntMatrix doubled = basis.transpose() * basis;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (doubled(i, j) % 4 != 0) {
                throw Error(ErrorKind::NotRecognizedLattice, "integral", "D16+ construction is not integral");
            }
            g(i, j) = -(doubled(i, j) / 4);
        }
    }
    return g;
}

void validate_even_unimodular_negative(const IntMatrix& g) {
    if (!g.is_symmetric()) {
        throw Error(ErrorKind::NotRecognizedLattice, "symmetric", "Gram matrix is not symmetric");
    }
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, i) % 2 != 0) {
            throw Error(ErrorKind::NotRecognizedLattice, "even", "Gram matrix has an odd diagonal entry");
        }
    }
    if (abs(determinant(g)) != 1) {
        throw Error(ErrorKind::NotRecognizedLattice, "unimodular", "Gram matrix has |det| != 1");
    }
}

struct Decomposition {
    std::vector<std::vector<mpq_class>> mu;  // mu[i][j], j > i
    std::vector<mpq_class> diag;
};

// Q(x) = sum_i diag_i (x_i + sum_{j>i} mu_ij x_j)^2, exact.
Decomposition quadratic_decomposition(const IntMatrix& g) {
    const std::size_t n = g.rows();
    Decomposition d;
    d.mu.assign(n, std::vector<mpq_class>(n));
    d.diag.assign(n, mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class qii(g(i, i));
        for (std::size_t k = 0; k < i; ++k) qii -= d.diag[k] * d.mu[k][i] * d.mu[k][i];
        if (sgn(qii) <= 0) {
            throw Error(ErrorKind::Definiteness, "positive-definite", "Gram matrix is not positive definite");
        }
        d.diag[i] = qii;
        for (std::size_t j = i + 1; j < n; ++j) {
            mpq_class qij(g(i, j));
            for (std::size_t k = 0; k < i; ++k) qij -= d.diag[k] * d.mu[k][i] * d.mu[k][j];
            d.mu[i][j] = qij / qii;
        }
    }
    return d;
}

// Pairwise (Gauss-style) size reduction of a positive definite Gram. Returns the reduced Gram and the
// change of basis B (columns = new basis vectors in old coordinates).
std::pair<IntMatrix, IntMatrix> pairwise_reduce(IntMatrix g) {
    const std::size_t n = g.rows();
    IntMatrix b = IntMatrix::identity(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (g(i, i) <= 0) {
                throw Error(ErrorKind::Definiteness, "positive-definite", "Gram matrix is not positive definite");
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Integer twice = 2 * g(i, j);
                if (abs(twice) <= g(i, i)) continue;
                Integer k;
                Integer num = twice + g(i, i);
                Integer den = 2 * g(i, i);
                mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (k == 0) continue;
                // b_j <- b_j - k b_i
                Integer gjj = g(j, j) - 2 * k * g(i, j) + k * k * g(i, i);
                for (std::size_t l = 0; l < n; ++l) {
                    if (l == j) continue;
                    g(j, l) -= k * g(i, l);
                    g(l, j) = g(j, l);
                }
                g(j, j) = gjj;
                for (std::size_t r = 0; r < n; ++r) b(r, j) -= k * b(r, i);
                if (g(j, j) <= 0) {
                    throw Error(ErrorKind::Definiteness, "positive-definite", "Gram matrix is not positive definite");
                }
                changed = true;
            }
        }
    }
    return {std::move(g), std::move(b)};
}

class ShortVectorSearch {
public:
    ShortVectorSearch(const Decomposition& d, const mpq_class& bound) : d_(d), bound_(bound) {
        x_.assign(d.diag.size(), 0);
    }

    std::vector<IntVector> run() {
        if (!x_.empty()) descend(x_.size() - 1, bound_);
        return std::move(found_);
    }

private:
    void descend(std::size_t level, const mpq_class& remaining) {
        const std::size_t n = x_.size();
        mpq_class center(0);
        for (std::size_t j = level + 1; j < n; ++j) {
            if (x_[j] != 0) center -= d_.mu[level][j] * static_cast<long>(x_[j]);
        }
        const mpq_class& q = d_.diag[level];
        // The feasible set {v : q (v - center)^2 <= remaining} is an interval around center; it is
        // nonempty iff it contains the integer nearest to center. Walk outward from there.
        auto used_at = [&](std::int64_t v) {
            mpq_class diff = mpq_class(static_cast<long>(v)) - center;
            return mpq_class(q * diff * diff);
        };
        mpz_class nearest;
        mpz_fdiv_q(nearest.get_mpz_t(), mpq_class(center + mpq_class(1, 2)).get_num_mpz_t(),
                   mpq_class(center + mpq_class(1, 2)).get_den_mpz_t());
        const std::int64_t v0 = nearest.get_si();
        if (used_at(v0) > remaining) {
            x_[level] = 0;
            return;
        }
        std::int64_t lo = v0;
        std::int64_t hi = v0;
        while (used_at(lo - 1) <= remaining) --lo;
        while (used_at(hi + 1) <= remaining) ++hi;
        for (std::int64_t v = lo; v <= hi; ++v) {
            mpq_class used = used_at(v);
            x_[level] = v;
            if (level == 0) {
                if (std::any_of(x_.begin(), x_.end(), [](std::int64_t t) { return t != 0; })) found_.push_back(x_);
            } else {
                descend(level - 1, remaining - used);
            }
        }
        x_[level] = 0;
    }

    const Decomposition& d_;
    mpq_class bound_;
    IntVector x_;
    std::vector<IntVector> found_;
};

IntVector negate(IntVector v) {
    for (auto& t : v) t = -t;
    return v;
}

bool leading_positive(const IntVector& v) {
    for (auto t : v) {
        if (t != 0) return t > 0;
    }
    return false;
}

}  // namespace

IntMatrix lambda_gram(FrameKind kind) {
    IntMatrix g(kLambdaRank, kLambdaRank);
    if (kind == FrameKind::E8E8) {
        IntMatrix e8 = e8_gram();
        g.set_block(0, 0, e8);
        g.set_block(8, 8, e8);
    } else {
        g = d16plus_gram();
    }
    validate_even_unimodular_negative(g);
    return g;
}

std::vector<IntVector> enumerate_short_vectors(const IntMatrix& gram, std::int64_t bound) {
    if (!gram.is_square() || !gram.is_symmetric()) {
        throw Error(ErrorKind::Definiteness, "symmetric", "Gram matrix must be square and symmetric");
    }
    if (bound < 0) {
        throw Error(ErrorKind::Precondition, "bound>=0", "negative enumeration bound");
    }
    const std::size_t n = gram.rows();
    auto [reduced, basis] = pairwise_reduce(gram);
    Decomposition d = quadratic_decomposition(reduced);
    std::vector<IntVector> raw = ShortVectorSearch(d, mpq_class(static_cast<long>(bound))).run();

    std::vector<IntVector> reps;
    reps.reserve(raw.size() / 2);
    for (const auto& y : raw) {
        IntVector x(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            Integer acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (y[k] != 0) acc += basis(r, k) * static_cast<long>(y[k]);
            }
            x[r] = acc.get_si();
        }
        if (leading_positive(x)) reps.push_back(std::move(x));
    }
    std::sort(reps.begin(), reps.end());
    std::vector<IntVector> out;
    out.reserve(2 * reps.size());
    for (auto& v : reps) {
        out.push_back(v);
        out.push_back(negate(std::move(v)));
    }
    return out;
}

std::vector<std::vector<std::size_t>> nonorthogonal_components(
    std::size_t n, const std::function<std::int64_t(std::size_t, std::size_t)>& pairing) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (pairing(i, j) != 0) parent[find(j)] = find(i);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

FrameKind classify_rank16(const IntMatrix& gram) {
    if (gram.rows() != kLambdaRank || gram.cols() != kLambdaRank) {
        throw Error(ErrorKind::NotRecognizedLattice, "rank-16", "expected a 16x16 Gram matrix");
    }
    validate_even_unimodular_negative(gram);
    const IntMatrix pos = -gram;
    auto roots = enumerate_short_vectors(pos, 2);
    std::vector<IntVector> forms;
    forms.reserve(roots.size());
    for (const auto& r : roots) {
        IntVector f(kLambdaRank, 0);
        for (std::size_t i = 0; i < kLambdaRank; ++i)
            for (std::size_t j = 0; j < kLambdaRank; ++j) f[i] += pos.at64(i, j) * r[j];
        forms.push_back(std::move(f));
    }
    auto comps = nonorthogonal_components(roots.size(), [&](std::size_t i, std::size_t j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < kLambdaRank; ++k) s += forms[i][k] * roots[j][k];
        return s;
    });
    std::vector<std::pair<std::size_t, std::size_t>> signature;
    for (const auto& comp : comps) {
        IntMatrix span(comp.size(), kLambdaRank);
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t j = 0; j < kLambdaRank; ++j) span(k, j) = static_cast<long>(roots[comp[k]][j]);
        signature.emplace_back(rank(span), comp.size());
    }
    std::sort(signature.begin(), signature.end());
    using Sig = std::vector<std::pair<std::size_t, std::size_t>>;
    if (signature == Sig{{8, 240}, {8, 240}}) return FrameKind::E8E8;
    if (signature == Sig{{16, 480}}) return FrameKind::D16Plus;
    std::string desc;
    for (auto [r, c] : signature) desc += " (rank " + std::to_string(r) + ", " + std::to_string(c) + " roots)";
    throw Error(ErrorKind::NotRecognizedLattice, "even-unimodular-rank-16",
                "root system components" + desc + " match neither E8+E8 nor D16+");
}

// ---------------------------------------------------------------------------------------------
// Frame

Frame::Frame(FrameKind kind, IntMatrix gram) : kind_(kind), gram_(std::move(gram)) {
    for (std::size_t i = 0; i < kLambdaRank; ++i)
        for (std::size_t j = 0; j < kLambdaRank; ++j) {
            fast_gram_[i][j] = gram_.at64(i, j);
            if (fast_gram_[i][j] != 0) entries_.push_back({i, j, fast_gram_[i][j]});
        }
    for (const auto& r : enumerate_short_vectors(-gram_, 2)) {
        LambdaVector c{};
        std::copy(r.begin(), r.end(), c.begin());
        roots_.push_back(c);
    }
}

const Frame& Frame::get(FrameKind kind) {
    static const Frame e8e8(FrameKind::E8E8, k3lcs::lambda_gram(FrameKind::E8E8));
    static const Frame d16(FrameKind::D16Plus, k3lcs::lambda_gram(FrameKind::D16Plus));
    return kind == FrameKind::E8E8 ? e8e8 : d16;
}

std::int64_t Frame::lambda_pair(const LambdaVector& c1, const LambdaVector& c2) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        if (c1[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < kLambdaRank; ++j) row += fast_gram_[i][j] * c2[j];
        s += c1[i] * row;
    }
    return s;
}

LambdaVector Frame::lambda_form(const LambdaVector& c) const {
    LambdaVector f{};
    for (std::size_t i = 0; i < kLambdaRank; ++i)
        for (std::size_t j = 0; j < kLambdaRank; ++j) f[i] += fast_gram_[i][j] * c[j];
    return f;
}

IntMatrix Frame::lattice_gram() const {
    IntMatrix g(kLatticeRank, kLatticeRank);
    g(0, 2) = g(2, 0) = 1;
    g(1, 3) = g(3, 1) = 1;
    g.set_block(4, 4, gram_);
    return g;
}

// ---------------------------------------------------------------------------------------------
// Elements

std::array<std::int64_t, kLatticeRank> LatticeElement::coords() const {
    std::array<std::int64_t, kLatticeRank> v{};
    v[0] = a[0];
    v[1] = a[1];
    v[2] = b[0];
    v[3] = b[1];
    std::copy(c.begin(), c.end(), v.begin() + 4);
    return v;
}

LatticeElement LatticeElement::from_coords(const std::array<std::int64_t, kLatticeRank>& v) {
    LatticeElement e;
    e.a = {v[0], v[1]};
    e.b = {v[2], v[3]};
    std::copy(v.begin() + 4, v.end(), e.c.begin());
    return e;
}

LatticeElement LatticeElement::from_coords(const std::vector<Integer>& v) {
    if (v.size() != kLatticeRank) {
        throw Error(ErrorKind::Precondition, "rank-20", "lattice element needs 20 coordinates");
    }
    std::array<std::int64_t, kLatticeRank> w{};
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
        if (!v[i].fits_slong_p()) {
            throw Error(ErrorKind::NotInteger, "fits-int64", "coordinate " + v[i].get_str() + " out of range");
        }
        w[i] = v[i].get_si();
    }
    return from_coords(w);
}

LatticeElement LatticeElement::operator-() const { return (-1) * *this; }

LatticeElement& LatticeElement::operator+=(const LatticeElement& o) {
    for (std::size_t i = 0; i < 2; ++i) {
        a[i] += o.a[i];
        b[i] += o.b[i];
    }
    for (std::size_t i = 0; i < kLambdaRank; ++i) c[i] += o.c[i];
    return *this;
}

LatticeElement operator*(std::int64_t k, LatticeElement x) {
    for (auto& t : x.a) t *= k;
    for (auto& t : x.b) t *= k;
    for (auto& t : x.c) t *= k;
    return x;
}

std::int64_t pair(const LatticeElement& e1, const LatticeElement& e2, const Frame& frame) {
    return e1.a[0] * e2.b[0] + e1.a[1] * e2.b[1] + e1.b[0] * e2.a[0] + e1.b[1] * e2.a[1] +
           frame.lambda_pair(e1.c, e2.c);
}

// ---------------------------------------------------------------------------------------------
// Sublattices

IntMatrix coordinate_matrix(const SublatticeBasis& v) {
    IntMatrix m(v.generators.size(), kLatticeRank);
    for (std::size_t i = 0; i < v.generators.size(); ++i) {
        auto c = v.generators[i].coords();
        for (std::size_t j = 0; j < kLatticeRank; ++j) m(i, j) = static_cast<long>(c[j]);
    }
    return m;
}

SublatticeBasis orthogonal_complement(const SublatticeBasis& v) {
    const Frame& frame = Frame::get(v.frame);
    IntMatrix forms = coordinate_matrix(v) * frame.lattice_gram();
    IntMatrix kernel = integer_kernel(forms);
    SublatticeBasis out;
    out.frame = v.frame;
    for (std::size_t i = 0; i < kernel.rows(); ++i) out.generators.push_back(LatticeElement::from_coords(kernel.row(i)));
    return out;
}

bool is_primitive_isotropic_rank2(const SublatticeBasis& v) {
    if (v.generators.size() != 2) return false;
    const Frame& frame = Frame::get(v.frame);
    for (const auto& g : v.generators)
        for (const auto& h : v.generators)
            if (pair(g, h, frame) != 0) return false;
    IntMatrix m = coordinate_matrix(v);
    auto divisors = elementary_divisors(m);
    if (divisors.size() != 2) return false;
    return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

IntMatrix isotropic_quotient_gram(const SublatticeBasis& v) {
    if (!is_primitive_isotropic_rank2(v)) {
        throw Error(ErrorKind::InvalidPlane, "primitive-isotropic-rank-2",
                    "sublattice is not a primitive isotropic plane");
    }
    const Frame& frame = Frame::get(v.frame);
    SublatticeBasis perp = orthogonal_complement(v);
    IntMatrix k = coordinate_matrix(perp);
    IntMatrix gk = k * frame.lattice_gram() * k.transpose();
    // The radical of V^perp is V itself (V is saturated), expressed here in the basis k.
    IntMatrix radical = integer_kernel(gk);
    if (radical.rows() != 2) {
        throw Error(ErrorKind::InvalidPlane, "radical-rank-2", "unexpected radical of V^perp");
    }
    IntMatrix w = complete_to_basis(radical);
    return w * gk * w.transpose();
}

FrameKind classify_isotropic_plane(const SublatticeBasis& v) { return classify_rank16(isotropic_quotient_gram(v)); }

std::optional<SublatticeBasis> search_isotropic_plane(FrameKind frame_kind, FrameKind target, std::uint64_t seed,
                                                      int max_attempts) {
    const Frame& frame = Frame::get(frame_kind);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        LambdaVector c{};
        bool odd = false;
        for (auto& t : c) {
            t = static_cast<std::int64_t>(rng() % 3) - 1;
            if (t % 2 != 0) odd = true;
        }
        if (!odd) continue;
        const std::int64_t norm = frame.lambda_pair(c, c);
        if (norm % 4 != 0) continue;
        LatticeElement f{{0, 2}, {0, -norm / 4}, c};
        SublatticeBasis v{{LatticeElement::y1(), f}, frame_kind};
        if (!is_primitive_isotropic_rank2(v)) continue;
        if (classify_isotropic_plane(v) == target) return v;
    }
    return std::nullopt;
}

}  // namespace k3lcs
