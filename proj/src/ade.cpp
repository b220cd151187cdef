#include "k3lcs/ade.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "k3lcs/error.hpp"

namespace k3lcs {

std::string AdeLabel::str() const {
    const char* f = family == AdeFamily::A ? "A" : (family == AdeFamily::D ? "D" : "E");
    return f + std::to_string(n);
}

int AdeLabel::root_count() const {
    switch (family) {
    case AdeFamily::A: return n * n + n;
    case AdeFamily::D: return 2 * n * n - 2 * n;
    case AdeFamily::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    }
    return 0;
}

AdeLabel parse_ade_label(const std::string& text) {
    if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'D' || text[0] == 'E')) {
        try {
            std::size_t used = 0;
            int n = std::stoi(text.substr(1), &used);
            AdeFamily f = text[0] == 'A' ? AdeFamily::A : (text[0] == 'D' ? AdeFamily::D : AdeFamily::E);
            bool ok = used == text.size() - 1 && ((f == AdeFamily::A && n >= 1) || (f == AdeFamily::D && n >= 4) ||
                                                  (f == AdeFamily::E && n >= 6 && n <= 8));
            if (ok) return {f, n};
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::Parse, "ADE label", "not an ADE label: '" + text + "'");
}

AdeLabel label_from_fingerprint(int rank, int count) {
    if (rank >= 1 && count == rank * rank + rank) return {AdeFamily::A, rank};
    if (rank >= 4 && count == 2 * rank * rank - 2 * rank) return {AdeFamily::D, rank};
    if ((rank == 6 && count == 72) || (rank == 7 && count == 126) || (rank == 8 && count == 240)) {
        return {AdeFamily::E, rank};
    }
    throw Error(ErrorKind::NotARootSystem, "(rank,count) in ADE table",
                "no simply-laced root system has rank " + std::to_string(rank) + " and " + std::to_string(count) +
                    " roots");
}

namespace {

// Lambda vectors with -(c, c) <= bound, plus zero, cached per frame and bound.
const std::vector<LambdaVector>& short_lambda_vectors(FrameKind frame, int bound) {
    static std::mutex mu;
    static std::map<std::pair<FrameKind, int>, std::vector<LambdaVector>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(frame, bound);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<LambdaVector> out{LambdaVector{}};
    if (bound >= 2) {
        for (const auto& v : enumerate_short_vectors(-Frame::get(frame).lambda_gram(), bound)) {
            LambdaVector c{};
            std::copy(v.begin(), v.end(), c.begin());
            out.push_back(c);
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

// Exact integer prefilter for <omega, r> = 0. With Im and Re parts brought to common denominators,
// b1 and b2 are integers in the box only if certain divisibilities hold; survivors are rechecked
// with rationals. Disabled (nullopt) when the scaled coefficients are too large for __int128.
class ScaledForms {
public:
    static std::optional<ScaledForms> make(const Frame& frame, const TubeCoords& t, const GaussianRational& u,
                                           const GaussianRational& v) {
        const ComplexLambda& z = t.z;
        std::array<Rational, kLambdaRank> gim{}, gre{};
        for (const auto& e : frame.gram_entries()) {
            gim[e.i] += Rational(e.value) * z[e.j].im();
            gre[e.i] += Rational(e.value) * z[e.j].re();
        }
        Integer dim = 1, dre = 1;
        auto lcm_in = [](Integer& acc, const Rational& x) { acc = lcm(acc, x.denominator()); };
        lcm_in(dim, u.im());
        lcm_in(dim, v.im());
        for (const auto& x : gim) lcm_in(dim, x);
        lcm_in(dre, u.re());
        lcm_in(dre, v.re());
        lcm_in(dre, t.tau.re());
        for (const auto& x : gre) lcm_in(dre, x);

        ScaledForms s;
        bool ok = true;
        auto scale = [&](const Rational& x, const Integer& d) -> Wide {
            Integer n = x.numerator() * (d / x.denominator());
            if (!fits(n)) ok = false;
            return ok ? static_cast<Wide>(n.get_si()) : 0;
        };
        if (!fits(dim) || !fits(dre)) return std::nullopt;
        s.dim_ = static_cast<Wide>(dim.get_si());
        s.dre_ = static_cast<Wide>(dre.get_si());
        s.uim_ = scale(u.im(), dim);
        s.vim_ = scale(v.im(), dim);
        s.ure_ = scale(u.re(), dre);
        s.vre_ = scale(v.re(), dre);
        s.t1_ = scale(t.tau.re(), dre);
        const Rational& tau2 = t.tau.im();
        if (!fits(tau2.numerator()) || !fits(tau2.denominator())) return std::nullopt;
        s.t2p_ = static_cast<Wide>(tau2.numerator().get_si());
        s.t2q_ = static_cast<Wide>(tau2.denominator().get_si());
        for (std::size_t i = 0; i < kLambdaRank; ++i) {
            s.gim_[i] = scale(gim[i], dim);
            s.gre_[i] = scale(gre[i], dre);
        }
        if (!ok) return std::nullopt;
        return s;
    }

    // Candidate (b1, b2) forced by <omega, r> = 0, if integral and inside the box.
    std::optional<std::array<std::int64_t, 2>> solve_b(std::int64_t a1, std::int64_t a2, const LambdaVector& c,
                                                        int box) const {
        // Im: b1 tau2 = -(a1 u2 + a2 v2 + (z2, c)) = -N / dim
        Wide n = a1 * uim_ + a2 * vim_;
        for (std::size_t i = 0; i < kLambdaRank; ++i) n += gim_[i] * c[i];
        // b1 = -N t2q / (dim t2p)
        Wide num = -n * t2q_;
        Wide den = dim_ * t2p_;
        if (num % den != 0) return std::nullopt;
        Wide b1 = num / den;
        if (b1 > box || b1 < -box) return std::nullopt;
        // Re: b2 = -(a1 u1 + a2 v1 + (z1, c) + b1 tau1) = -M / dre
        Wide m = a1 * ure_ + a2 * vre_ + b1 * t1_;
        for (std::size_t i = 0; i < kLambdaRank; ++i) m += gre_[i] * c[i];
        if (m % dre_ != 0) return std::nullopt;
        Wide b2 = -m / dre_;
        if (b2 > box || b2 < -box) return std::nullopt;
        return std::array<std::int64_t, 2>{static_cast<std::int64_t>(b1), static_cast<std::int64_t>(b2)};
    }

private:
    using Wide = __int128;
    // Coefficients below 2^40 keep every intermediate product well inside 128 bits.
    static bool fits(const Integer& x) { return abs(x) < (Integer(1) << 40); }

    Wide dim_ = 1, dre_ = 1, uim_ = 0, vim_ = 0, ure_ = 0, vre_ = 0, t1_ = 0, t2p_ = 1, t2q_ = 1;
    std::array<Wide, kLambdaRank> gim_{}, gre_{};
};

void verify_roots(const PeriodVector& w, const std::vector<LatticeElement>& roots) {
    const Frame& frame = Frame::get(w.frame);
    for (const auto& r : roots) {
        if (pair(r, r, frame) != -2 || !pair(w, r).is_zero()) {
            throw Error(ErrorKind::TheoremViolation, "<r,r>=-2 and <omega,r>=0", "root search produced a non-root");
        }
    }
}

}  // namespace

std::vector<LatticeElement> roots_in_vperp(const GaussianRational& tau, const ComplexLambda& z, FrameKind frame) {
    if (tau.im().sign() <= 0) {
        throw Error(ErrorKind::NotInUpperHalfPlane, "Im(tau)>0", "tau is not in the upper half-plane");
    }
    const Frame& fr = Frame::get(frame);
    const Rational inv_tau2 = Rational(1) / tau.im();
    std::vector<LatticeElement> out;
    for (const auto& c : fr.lambda_roots()) {
        GaussianRational cz = lambda_pair(fr, z, c);
        Rational b1 = -cz.im() * inv_tau2;
        if (!b1.is_integer()) continue;
        Rational b2 = -cz.re() - b1 * tau.re();
        if (!b2.is_integer()) continue;
        out.push_back({{0, 0}, {b1.to_int64(), b2.to_int64()}, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootSearch find_roots_general(const PeriodVector& p, int box_bound, int c_norm_bound) {
    if (box_bound < 0 || c_norm_bound < 0) {
        throw Error(ErrorKind::Precondition, "bounds>=0", "search bounds must be non-negative");
    }
    const Frame& frame = Frame::get(p.frame);
    TubeCoords t = tube_from_omega(p);
    PeriodVector w = omega_from_tube(t);  // (tau, 1)(u, v)(z)
    const GaussianRational& u = w.b[0];
    const GaussianRational& v = w.b[1];
    const Rational inv_tau2 = Rational(1) / t.tau.im();
    const Rational bound(box_bound);

    RootSearch res;
    res.roots = roots_in_vperp(t.tau, t.z, p.frame);
    const auto& cs = short_lambda_vectors(p.frame, c_norm_bound);
    auto try_candidate = [&](std::int64_t a1, std::int64_t a2, std::size_t k) {
        // <omega, r> = b1 tau + b2 + a1 u + a2 v + (z, c) = 0
        const GaussianRational x = GaussianRational(a1) * u + GaussianRational(a2) * v + lambda_pair(frame, t.z, cs[k]);
        Rational b1 = -x.im() * inv_tau2;
        if (!b1.is_integer() || b1.abs() > bound) return;
        Rational b2 = -x.re() - b1 * t.tau.re();
        if (!b2.is_integer() || b2.abs() > bound) return;
        LatticeElement r{{a1, a2}, {b1.to_int64(), b2.to_int64()}, cs[k]};
        if (pair(r, r, frame) == -2) res.roots.push_back(r);
    };

    std::vector<std::int64_t> norms(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) norms[k] = frame.lambda_pair(cs[k], cs[k]);
    std::optional<ScaledForms> scaled = ScaledForms::make(frame, t, u, v);
    for (std::int64_t a1 = -box_bound; a1 <= box_bound; ++a1) {
        for (std::int64_t a2 = -box_bound; a2 <= box_bound; ++a2) {
            if (a1 == 0 && a2 == 0) continue;
            for (std::size_t k = 0; k < cs.size(); ++k) {
                if (scaled) {
                    auto b = scaled->solve_b(a1, a2, cs[k], box_bound);
                    // 2(a1 b1 + a2 b2) + (c, c) = -2
                    if (!b || 2 * (a1 * (*b)[0] + a2 * (*b)[1]) + norms[k] != -2) continue;
                }
                try_candidate(a1, a2, k);
            }
        }
    }
    std::sort(res.roots.begin(), res.roots.end());
    res.roots.erase(std::unique(res.roots.begin(), res.roots.end()), res.roots.end());
    verify_roots(w, res.roots);
    res.complete = lcs_test(narain_from_tube(t)).is_lcs;
    return res;
}

std::vector<RootComponent> decompose_root_system(const std::vector<LatticeElement>& roots, FrameKind frame) {
    const Frame& fr = Frame::get(frame);
    for (const auto& r : roots) {
        if (pair(r, r, fr) != -2) {
            throw Error(ErrorKind::NotARootSystem, "<r,r>=-2", "input contains a vector of norm != -2");
        }
    }
    std::vector<LatticeElement> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto comps = nonorthogonal_components(sorted.size(), [&](std::size_t i, std::size_t j) {
        return pair(sorted[i], sorted[j], fr);
    });
    std::vector<RootComponent> out;
    for (const auto& idx : comps) {
        RootComponent comp;
        IntMatrix coords(idx.size(), kLatticeRank);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            comp.roots.push_back(sorted[idx[k]]);
            auto v = sorted[idx[k]].coords();
            for (std::size_t j = 0; j < kLatticeRank; ++j) coords(k, j) = v[j];
        }
        comp.rank = static_cast<int>(rank(coords));
        comp.count = static_cast<int>(idx.size());
        comp.label = label_from_fingerprint(comp.rank, comp.count);
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::string> kodaira_candidates(const AdeLabel& label) {
    switch (label.family) {
    case AdeFamily::A:
        if (label.n == 1) return {"I2", "III"};
        if (label.n == 2) return {"I3", "IV"};
        return {"I" + std::to_string(label.n + 1)};
    case AdeFamily::D: return {"I*" + std::to_string(label.n - 4)};
    case AdeFamily::E:
        if (label.n == 6) return {"IV*"};
        if (label.n == 7) return {"III*"};
        return {"II*"};
    }
    return {};
}

std::vector<std::string> kodaira_candidates_trivial() { return {"I1", "II"}; }

RootSystemReport make_report(std::vector<LatticeElement> roots, bool complete, FrameKind frame) {
    RootSystemReport rep;
    rep.components = decompose_root_system(roots, frame);
    for (const auto& c : rep.components) rep.kodaira.push_back(kodaira_candidates(c.label));
    rep.complete = complete;
    std::sort(roots.begin(), roots.end());
    rep.roots = std::move(roots);
    return rep;
}

RootSystemReport root_system_report(const PeriodVector& p, int box_bound, int c_norm_bound) {
    RootSearch s = find_roots_general(p, box_bound, c_norm_bound);
    return make_report(std::move(s.roots), s.complete, p.frame);
}

RootSystemReport fiber_constancy_scan(const GaussianRational& tau, const ComplexLambda& z, FrameKind frame,
                                      const std::vector<GaussianRational>& u_tilde_samples, int box_bound,
                                      int c_norm_bound) {
    if (u_tilde_samples.empty()) {
        throw Error(ErrorKind::Precondition, "samples nonempty", "fiber scan needs at least one u_tilde sample");
    }
    std::vector<NarainCoords> points;
    for (const auto& u : u_tilde_samples) {
        NarainCoords n{tau, u, z, frame};
        if (!lcs_test(n).is_lcs) {
            throw Error(ErrorKind::Precondition, "lcs_test", "sample u_tilde = " + u.str() + " is not in the LCS region");
        }
        points.push_back(n);
    }
    std::optional<RootSearch> first;
    for (const auto& n : points) {
        RootSearch s = find_roots_general(omega_from_narain(n), box_bound, c_norm_bound);
        if (!first) {
            first = std::move(s);
        } else if (s.roots != first->roots) {
            throw Error(ErrorKind::TheoremViolation, "root set constant along the fiber",
                        "root set changed between u_tilde samples");
        }
    }
    return make_report(std::move(first->roots), true, frame);
}

}  // namespace k3lcs
