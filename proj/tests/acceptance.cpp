// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.
// Usage: acceptance [work-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "k3lcs/ade.hpp"
#include "k3lcs/error.hpp"
#include "k3lcs/json_io.hpp"
#include "k3lcs/lattice.hpp"
#include "k3lcs/parabolic.hpp"
#include "k3lcs/period.hpp"
#include "k3lcs/sampling.hpp"

using namespace k3lcs;
namespace fs = std::filesystem;

namespace {

// Failures are collected rather than thrown so a criterion reports how many checks broke.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    bool pass() const { return failures == 0 && checks > 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks << " checks";
        if (failures) s << ", " << failures << " failed; first: " << first;
        return s.str();
    }
};

GaussianRational gi(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }

std::size_t exact_norm_count(const IntMatrix& pos, std::int64_t norm) {
    std::size_t n = 0;
    for (const auto& v : enumerate_short_vectors(pos, norm)) {
        Integer s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) s += pos(i, j) * static_cast<long>(v[i] * v[j]);
        if (s == norm) ++n;
    }
    return n;
}

Integer root_span_index(FrameKind k) {
    const auto& roots = Frame::get(k).lambda_roots();
    IntMatrix m(roots.size(), kLambdaRank);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < kLambdaRank; ++j) m(i, j) = roots[i][j];
    auto divs = elementary_divisors(m);
    if (divs.size() != kLambdaRank) return 0;
    Integer prod = 1;
    for (const auto& d : divs) prod *= d;
    return prod;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        int k = coef(rng);
        if (i == j || k == 0) continue;
        for (std::size_t r = 0; r < n; ++r) u(r, i) += k * u(r, j);
    }
    return u;
}

// Largest Im tau reachable by words of length <= len in S, T, T^-1.
Rational best_im_by_words(const GaussianRational& tau, int len) {
    const Mat2 gens[3] = {Mat2::s(), Mat2::t(1), Mat2::t(-1)};
    Rational best = tau.im();
    std::vector<GaussianRational> frontier{tau};
    for (int k = 0; k < len; ++k) {
        std::vector<GaussianRational> next;
        for (const auto& t : frontier)
            for (const auto& g : gens) {
                GaussianRational s = mobius(g, t);
                if (s.im() > best) best = s.im();
                next.push_back(s);
            }
        frontier = std::move(next);
    }
    return best;
}

std::multiset<std::string> labels(const RootSystemReport& r) {
    std::multiset<std::string> out;
    for (const auto& c : r.components) out.insert(c.label.str());
    return out;
}

const FrameKind kFrames[2] = {FrameKind::E8E8, FrameKind::D16Plus};

// 1. Lattice constants by enumeration.
Tally lattice_constants() {
    Tally t;
    t.expect(enumerate_short_vectors(-e8_gram(), 2).size() == 240, "E8 root count");
    t.expect(Frame::e8e8().lambda_roots().size() == 480, "E8+E8 root count");
    t.expect(Frame::d16plus().lambda_roots().size() == 480, "D16+ root count");
    std::size_t n1 = exact_norm_count(-Frame::e8e8().lambda_gram(), 4);
    std::size_t n2 = exact_norm_count(-Frame::d16plus().lambda_gram(), 4);
    t.expect(n1 == 61920, "E8+E8 norm-4 count " + std::to_string(n1));
    t.expect(n2 == 61920, "D16+ norm-4 count " + std::to_string(n2));
    t.expect(root_span_index(FrameKind::D16Plus) == 2, "D16+ root span index");
    t.expect(root_span_index(FrameKind::E8E8) == 1, "E8+E8 root span index");
    return t;
}

// 2. classify_rank16 on standard Grams and 20 random basis changes.
Tally classify_frames() {
    Tally t;
    for (FrameKind k : kFrames) t.expect(classify_rank16(Frame::get(k).lambda_gram()) == k, "standard Gram");
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
        FrameKind k = kFrames[i % 2];
        IntMatrix u = random_unimodular(rng, kLambdaRank, 60);
        IntMatrix g = u.transpose() * Frame::get(k).lambda_gram() * u;
        t.expect(classify_rank16(g) == k, "basis change " + std::to_string(i));
    }
    return t;
}

// 3. Chart roundtrips and <omega, conj omega> = 2 (2 tau2 u2 + (z2, z2)).
Tally chart_roundtrips() {
    Tally t;
    sampling::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        NarainCoords n = sampling::narain_point(rng, kFrames[i % 2]);
        TubeCoords tube = tube_from_narain(n);
        PeriodVector w = omega_from_tube(tube);
        validate_period(w);
        t.expect(narain_from_tube(tube) == n, "tube -> Narain");
        t.expect(tube_from_omega(w) == tube, "omega -> tube");
        t.expect(narain_from_omega(omega_from_narain(n)) == n, "omega -> Narain");
        t.expect(pair(w, w).is_zero(), "isotropy");
        t.expect(pair(w, w.conj()) == GaussianRational(Rational(2) * tube_positivity(tube)), "Hodge-Riemann identity");
    }
    return t;
}

// 4. rho invariance, rho^2 >= 3/4, worked reductions against the word oracle.
Tally rho_properties() {
    Tally t;
    sampling::Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        GaussianRational tau = sampling::upper_half_plane(rng);
        Mat2 m = sampling::sl2_word(rng, 8);
        Rational rho = reduce_sl2(tau).rho;
        t.expect(reduce_sl2(mobius(m, tau)).rho == rho, "rho(m tau) = rho(tau) at " + tau.str());
        t.expect(rho * rho >= Rational(3, 4), "rho^2 >= 3/4");
    }
    const GaussianRational worked[3] = {gi(0, 1), {Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
    const Rational expected[3] = {Rational(1), Rational(2), Rational(1)};
    for (int i = 0; i < 3; ++i) {
        Rational oracle = best_im_by_words(worked[i], 6);
        t.expect(oracle == expected[i], "word oracle at " + worked[i].str());
        t.expect(reduce_sl2(worked[i]).rho == oracle, "reduction at " + worked[i].str());
    }
    return t;
}

// 5. Parabolic group laws and necessity of the R/Q condition.
Tally parabolic_suite() {
    Tally t;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> e(-2, 2);
    int accepted = 0, rejected = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        FrameKind k = kFrames[seed % 2];
        const IntMatrix gram = Frame::get(k).lattice_gram();
        ParabolicIsometry g = sample_parabolic(k, seed);
        ParabolicIsometry h = sample_parabolic(k, seed + 7919);
        IntMatrix gm = g.matrix();
        t.expect(gm.transpose() * gram * gm == gram, "Gram preserved");
        ParabolicIsometry gh = compose(g, h);
        t.expect(gh.matrix() == gm * h.matrix(), "composition law");
        ParabolicFactors d = decompose(g);
        t.expect(compose(d.heisenberg, compose(d.sl2, d.orthogonal)) == g, "decomposition");
        t.expect(compose(g, inverse(g)).is_identity(), "inverse");

        Mat2 pert{e(rng), e(rng), e(rng), e(rng)};
        if (pert == Mat2::zero()) pert.a = 1;
        Mat2 mte = g.m().transpose() * pert;
        bool keeps = mte.a == 0 && mte.d == 0 && mte.b == -mte.c;
        try {
            make_parabolic(k, g.m(), g.q(), g.r() + pert, g.f());
            t.expect(keeps, "R/Q violation accepted");
            ++accepted;
        } catch (const Error& err) {
            t.expect(!keeps && err.kind() == ErrorKind::RqConditionFailed, "valid R rejected or wrong error kind");
            ++rejected;
        }
    }
    t.expect(rejected > 0, "no violations sampled");
    return t;
}

// 6. Closed-form actions per generator class and invariance of Im u_tilde.
Tally closed_forms() {
    Tally t;
    for (GeneratorClass cls : {GeneratorClass::SL2, GeneratorClass::Orthogonal, GeneratorClass::Heisenberg}) {
        std::mt19937_64 rng(60 + static_cast<int>(cls));
        sampling::Rng prng(600 + static_cast<int>(cls));
        for (int i = 0; i < 300; ++i) {
            FrameKind k = kFrames[i % 2];
            ParabolicIsometry g = sample_generator(k, cls, rng, {});
            NarainCoords n = sampling::narain_point(prng, k);
            NarainCoords m = narain_from_omega(act_on_period(g, omega_from_narain(n)));
            t.expect(narain_transform(g, n) == m, "closed form vs matrix action");
            t.expect(m.u_tilde.im() == n.u_tilde.im(), "Im u_tilde invariant");
        }
    }
    sampling::Rng prng(66);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        FrameKind k = kFrames[seed % 2];
        ParabolicIsometry g = sample_parabolic(k, seed);
        NarainCoords n = sampling::narain_point(prng, k);
        NarainCoords m = narain_from_omega(act_on_period(g, omega_from_narain(n)));
        t.expect(narain_transform(g, n) == m, "closed form vs matrix action (product)");
        t.expect(m.u_tilde.im() == n.u_tilde.im(), "Im u_tilde invariant (product)");
    }
    return t;
}

// 7. Lower bounds for |<omega, r>| outside V-perp.
Tally lemma_gaps() {
    Tally t;
    sampling::Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        FrameKind k = kFrames[i % 2];
        PeriodVector w = omega_from_narain(sampling::narain_point(rng, k));
        LatticeElement r = sampling::lattice_element(rng, 3);
        if (r.a[0] == 0 && r.a[1] == 0) r.a[i % 2] = 1;
        Lemma1Report g = lemma1_gap(w, r);
        t.expect(g.lemma_sign >= 0, "lemma gap negative");
        t.expect(g.remark_gap.sign() >= 0, "remark gap negative");
    }
    PeriodVector w = omega_from_tube({gi(0, 1), gi(0, 1), {}, FrameKind::E8E8});
    for (const LatticeElement& r : {LatticeElement::x1(), LatticeElement::x2()}) {
        Lemma1Report g = lemma1_gap(w, r);
        t.expect(g.lemma_sign == 0, "equality case: lemma");
        t.expect(g.remark_gap == Rational(0), "equality case: remark");
    }
    return t;
}

// 8. lcs_test is P+-invariant; the block swap leaves the LCS region.
Tally lcs_behaviour() {
    Tally t;
    sampling::Rng rng(8);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        FrameKind k = kFrames[seed % 2];
        NarainCoords n = seed % 3 ? sampling::lcs_point(rng, k) : sampling::narain_point(rng, k);
        ParabolicIsometry g = sample_parabolic(k, seed + 300);
        LcsReport a = lcs_test(n);
        LcsReport b = lcs_test(narain_from_omega(act_on_period(g, omega_from_narain(n))));
        t.expect(a.is_lcs == b.is_lcs && a.rho == b.rho && a.u_tilde_2 == b.u_tilde_2, "lcs_test changed under P+");
    }
    for (int i = 0; i < 100; ++i) {
        FrameKind k = kFrames[i % 2];
        NarainCoords n = sampling::lcs_point(rng, k);
        NarainCoords m = narain_from_omega(act_on_period(h_block_swap(k), omega_from_narain(n)));
        t.expect(!lcs_test(m).is_lcs, "block swap image still LCS");
    }
    return t;
}

// 9. Root systems, Kodaira candidates and fiber constancy.
Tally ade_kodaira() {
    Tally t;
    const GaussianRational tau = gi(0, 1), u = gi(0, 2);
    RootSystemReport e = root_system_report(omega_from_narain({tau, u, {}, FrameKind::E8E8}), 2, 4);
    t.expect(labels(e) == std::multiset<std::string>{"E8", "E8"}, "e8e8 frame at z = 0");
    for (const auto& k : e.kodaira) t.expect(k == std::vector<std::string>{"II*"}, "E8 Kodaira type");
    RootSystemReport d = root_system_report(omega_from_narain({tau, u, {}, FrameKind::D16Plus}), 2, 4);
    t.expect(labels(d) == std::multiset<std::string>{"D16"}, "d16plus frame at z = 0");

    ComplexLambda generic, second;
    for (std::size_t i = 0; i < kLambdaRank; ++i) {
        generic[i] = GaussianRational(Rational(1, 97 + 2 * static_cast<std::int64_t>(i)), Rational(i + 1, 211));
        if (i >= 8) second[i] = generic[i];
    }
    for (FrameKind k : kFrames)
        t.expect(root_system_report(omega_from_narain({tau, u, generic, k}), 2, 4).components.empty(), "generic z");
    t.expect(labels(root_system_report(omega_from_narain({tau, u, second, FrameKind::E8E8}), 2, 4)) ==
                 std::multiset<std::string>{"E8"},
             "second-factor z");

    sampling::Rng rng(9);
    for (FrameKind k : kFrames) {
        for (int j = 0; j < 3; ++j) {
            ComplexLambda z = j == 0 ? ComplexLambda{} : sampling::small_z(rng);
            std::vector<GaussianRational> us;
            for (int s = 0; s < 6; ++s) us.push_back(GaussianRational(Rational(s, 4), Rational(2 + s)));
            try {
                RootSystemReport r = fiber_constancy_scan(tau, z, k, us, 2, 4);
                t.expect(r.roots == roots_in_vperp(tau, z, k), "fiber scan root set");
            } catch (const Error& err) {
                t.expect(false, std::string("fiber scan: ") + err.what());
            }
        }
    }
    for (int i = 0; i < 100; ++i) {
        FrameKind k = kFrames[i % 2];
        NarainCoords n = sampling::lcs_point(rng, k);
        RootSearch s = find_roots_general(omega_from_narain(n), 2, 4);
        t.expect(s.complete, "LCS point reported incomplete");
        t.expect(s.roots == roots_in_vperp(n.tau, n.z, k), "general search vs V-perp roots");
    }
    return t;
}

int shell(const std::string& cmd) {
    int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// 10. Byte-identical CLI output on a 1000-record dataset; selftest exits 0.
Tally cli_determinism(const fs::path& work) {
    Tally t;
    fs::create_directories(work);
    const fs::path data = work / "dataset.jsonl";
    {
        std::ofstream f(data);
        sampling::Rng rng(10);
        for (int i = 0; i < 1000; ++i) {
            FrameKind k = kFrames[i % 2];
            NarainCoords n = i % 2 ? sampling::lcs_point(rng, k) : sampling::narain_point(rng, k);
            json::Json rec = json::write(n);
            rec["frame"] = std::string(to_string(k));
            rec["g"] = json::Json{{"sample", i}};
            f << rec.dump() << "\n";
        }
    }
    const std::string bin = K3LCS_BINARY;
    for (const char* cmd : {"act", "lcs-test", "coords"}) {
        std::string outs[2];
        for (int run = 0; run < 2; ++run) {
            fs::path out = work / (std::string(cmd) + "_" + std::to_string(run) + ".jsonl");
            int code = shell(bin + " " + cmd + " --input " + data.string() + " > " + out.string());
            t.expect(code == 0, std::string(cmd) + " exit code " + std::to_string(code));
            outs[run] = slurp(out);
        }
        t.expect(!outs[0].empty() && outs[0] == outs[1], std::string(cmd) + " output differs between runs");
        t.expect(std::count(outs[0].begin(), outs[0].end(), '\n') == 1000, std::string(cmd) + " record count");
    }
    t.expect(shell(bin + " selftest > " + (work / "selftest.jsonl").string()) == 0, "selftest");
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "k3lcs_acceptance";
    struct Criterion {
        int id;
        const char* name;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "lattice constants", lattice_constants},
        {2, "frame classification", classify_frames},
        {3, "chart roundtrips", chart_roundtrips},
        {4, "rho properties", rho_properties},
        {5, "parabolic group laws", parabolic_suite},
        {6, "closed-form actions", closed_forms},
        {7, "lemma gaps", lemma_gaps},
        {8, "LCS region behaviour", lcs_behaviour},
        {9, "ADE and Kodaira", ade_kodaira},
        {10, "CLI determinism", [&] { return cli_determinism(work); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d: %s (%s, %.1fs)\n", t.pass() ? "PASS" : "FAIL", c.id, c.name, t.summary().c_str(), secs);
        std::fflush(stdout);
        if (!t.pass()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
