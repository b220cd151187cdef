#include "k3lcs/selftest.hpp"

#include <functional>

#include "k3lcs/ade.hpp"
#include "k3lcs/error.hpp"
#include "k3lcs/parabolic.hpp"
#include "k3lcs/sampling.hpp"

namespace k3lcs {

namespace {

using sampling::Rng;

// Each suite returns an empty string on success and a description of the first failure otherwise.
using Suite = std::function<std::string(Rng&)>;

std::string scalars_suite(Rng& rng) {
    if (cmp_sq_threshold(Rational(6, 5), 4, 3) != std::strong_ordering::greater) return "6/5 vs 2/sqrt3";
    if (cmp_sq_threshold(Rational(1), 4, 3) != std::strong_ordering::less) return "1 vs 2/sqrt3";
    for (int i = 0; i < 200; ++i) {
        GaussianRational x(sampling::rational(rng, 20, 9), sampling::rational(rng, 20, 9));
        GaussianRational y(sampling::rational(rng, 20, 9), sampling::positive_rational(rng, 20, 9));
        if (!((x * y) / y == x)) return "field identity (x y) / y = x";
        if (!(abs_sq(x * y) == abs_sq(x) * abs_sq(y))) return "|xy|^2 = |x|^2 |y|^2";
    }
    return "";
}

std::string lattice_suite(Rng&) {
    for (FrameKind k : {FrameKind::E8E8, FrameKind::D16Plus}) {
        const Frame& f = Frame::get(k);
        if (f.lambda_roots().size() != 480) return "480 roots in " + std::string(to_string(k));
        if (classify_rank16(f.lambda_gram()) != k) return "classify_rank16 on " + std::string(to_string(k));
    }
    if (enumerate_short_vectors(-e8_gram(), 2).size() != 240) return "240 roots of E8";
    SublatticeBasis v{{LatticeElement::y1(), LatticeElement::y2()}, FrameKind::E8E8};
    if (!is_primitive_isotropic_rank2(v) || classify_isotropic_plane(v) != FrameKind::E8E8) return "standard plane";
    return "";
}

std::string charts_suite(Rng& rng) {
    for (int i = 0; i < 100; ++i) {
        FrameKind k = i % 2 ? FrameKind::D16Plus : FrameKind::E8E8;
        NarainCoords n = sampling::narain_point(rng, k);
        TubeCoords t = tube_from_narain(n);
        PeriodVector w = omega_from_tube(t);
        if (!(narain_from_omega(w) == n) || !(tube_from_omega(w) == t)) return "chart roundtrip";
        if (!(pair(w, w.conj()) == GaussianRational(Rational(2) * tube_positivity(t)))) return "<w, conj w> identity";
        GaussianRational marker = GaussianRational::i() * pair(nilpotent(w), w.conj());
        if (!marker.is_real() || marker.re().sign() <= 0) return "component marker";
    }
    return "";
}

std::string reduction_suite(Rng& rng) {
    for (int i = 0; i < 100; ++i) {
        GaussianRational tau = sampling::upper_half_plane(rng);
        ReductionResult r = reduce_sl2(tau);
        Mat2 m = sampling::sl2_word(rng, 6);
        if (!(reduce_sl2(mobius(m, tau)).rho == r.rho)) return "rho invariance";
        if (cmp_sq_threshold(r.rho, 3, 4) == std::strong_ordering::less) return "rho >= sqrt3/2";
        if (!(mobius(r.m, tau) == r.tau_reduced)) return "m tau = reduced tau";
    }
    return "";
}

std::string parabolic_suite(Rng& rng) {
    for (std::uint64_t s = 1; s <= 40; ++s) {
        FrameKind k = s % 2 ? FrameKind::E8E8 : FrameKind::D16Plus;
        ParabolicIsometry g1 = sample_parabolic(k, rng());
        ParabolicIsometry g2 = sample_parabolic(k, rng());
        if (!(compose(g1, g2).matrix() == g1.matrix() * g2.matrix())) return "composition law";
        ParabolicFactors d = decompose(g1);
        if (!(compose(compose(d.heisenberg, d.sl2), d.orthogonal) == g1)) return "decomposition";
        NarainCoords n = sampling::narain_point(rng, k);
        NarainCoords closed = narain_transform(g1, n);
        if (!(closed == narain_from_omega(act_on_period(g1, omega_from_narain(n))))) return "closed forms";
        if (!(closed.u_tilde.im() == n.u_tilde.im())) return "Im u_tilde invariance";
    }
    return "";
}

std::string lemma_suite(Rng& rng) {
    for (int i = 0; i < 200; ++i) {
        FrameKind k = i % 2 ? FrameKind::E8E8 : FrameKind::D16Plus;
        PeriodVector w = omega_from_narain(sampling::narain_point(rng, k));
        LatticeElement r = sampling::lattice_element(rng, 2);
        if (r.a[0] == 0 && r.a[1] == 0) r.a[0] = 1;
        Lemma1Report rep = lemma1_gap(w, r);
        if (rep.lemma_sign < 0) return "lemma gap negative";
        if (rep.remark_gap.sign() < 0) return "remark gap negative";
    }
    return "";
}

std::string lcs_suite(Rng& rng) {
    for (int i = 0; i < 40; ++i) {
        FrameKind k = i % 2 ? FrameKind::E8E8 : FrameKind::D16Plus;
        NarainCoords n = sampling::lcs_point(rng, k);
        if (!lcs_test(n).is_lcs) return "sampled LCS point";
        ParabolicIsometry g = sample_parabolic(k, rng());
        if (!lcs_test(narain_transform(g, n)).is_lcs) return "P+ invariance";
        NarainCoords image = narain_from_omega(act_on_period(h_block_swap(k), omega_from_narain(n)));
        if (lcs_test(image).is_lcs) return "block swap leaves the LCS region";
    }
    return "";
}

std::string ade_suite(Rng&) {
    PeriodVector w = omega_from_narain({GaussianRational::i(), GaussianRational(0, 2), {}, FrameKind::E8E8});
    RootSystemReport rep = root_system_report(w, 1, 2);
    if (!rep.complete || rep.components.size() != 2) return "E8 + E8 at tau = i";
    for (const auto& c : rep.components) {
        if (c.label.str() != "E8") return "E8 label";
    }
    if (kodaira_candidates(parse_ade_label("A1")) != std::vector<std::string>{"I2", "III"}) return "A1 fibers";
    if (kodaira_candidates(parse_ade_label("D5")) != std::vector<std::string>{"I*1"}) return "D5 fibers";
    return "";
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
    const std::vector<std::pair<std::string, Suite>> suites = {
        {"exact-scalars", scalars_suite}, {"lattice-core", lattice_suite},   {"period-charts", charts_suite},
        {"sl2-reduction", reduction_suite}, {"parabolic-group", parabolic_suite}, {"lemma-gap", lemma_suite},
        {"lcs-region", lcs_suite},        {"ade-kodaira", ade_suite},
    };
    std::vector<SuiteResult> out;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        Rng rng(seed * 1000003 + i);
        SuiteResult r{suites[i].first, false, ""};
        try {
            r.detail = suites[i].second(rng);
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace k3lcs
