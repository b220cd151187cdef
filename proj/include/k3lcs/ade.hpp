#pragma once

#include <string>
#include <vector>

#include "k3lcs/lattice.hpp"
#include "k3lcs/period.hpp"

namespace k3lcs {

enum class AdeFamily { A, D, E };

struct AdeLabel {
    AdeFamily family = AdeFamily::A;
    int n = 1;

    std::string str() const;
    /// (rank, root count) of the irreducible root system.
    int rank() const { return n; }
    int root_count() const;
    friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

/// Parses "A3", "D16", "E8".
AdeLabel parse_ade_label(const std::string& text);

/// Label with the given (rank, count) fingerprint; throws ErrorKind::NotARootSystem if none matches.
AdeLabel label_from_fingerprint(int rank, int count);

struct RootComponent {
    std::vector<LatticeElement> roots;
    int rank = 0;
    int count = 0;
    AdeLabel label;
};

struct RootSystemReport {
    std::vector<RootComponent> components;
    /// Candidate Kodaira fiber types, one set per component.
    std::vector<std::vector<std::string>> kodaira;
    /// True when the point satisfies the LCS condition, so the search provably found every root.
    bool complete = false;
    std::vector<LatticeElement> roots;
};

/// Roots (0,0)(b1,b2)(c) with c a root of Lambda and b1 tau + b2 + (c, z) = 0, in canonical order.
std::vector<LatticeElement> roots_in_vperp(const GaussianRational& tau, const ComplexLambda& z, FrameKind frame);

struct RootSearch {
    std::vector<LatticeElement> roots;
    bool complete = false;
};

/// Roots r of L with <omega, r> = 0. Candidates with a != 0 are searched in the box |a_i|, |b_i| <= box_bound,
/// -(c, c) <= c_norm_bound; the a = 0 slice is solved exactly by roots_in_vperp. `complete` is the LCS test.
RootSearch find_roots_general(const PeriodVector& p, int box_bound, int c_norm_bound);

/// Splits roots into mutually orthogonal irreducible systems, labelled by (rank, count).
std::vector<RootComponent> decompose_root_system(const std::vector<LatticeElement>& roots, FrameKind frame);

std::vector<std::string> kodaira_candidates(const AdeLabel& label);
/// Fiber types invisible to the root lattice (trivial component).
std::vector<std::string> kodaira_candidates_trivial();

RootSystemReport make_report(std::vector<LatticeElement> roots, bool complete, FrameKind frame);

/// Full report at a period point.
RootSystemReport root_system_report(const PeriodVector& p, int box_bound, int c_norm_bound);

/// Runs find_roots_general at (tau, u_tilde, z) for each sample and checks the root sets agree.
/// Non-LCS samples are rejected (ErrorKind::Precondition); a mismatch raises ErrorKind::TheoremViolation.
RootSystemReport fiber_constancy_scan(const GaussianRational& tau, const ComplexLambda& z, FrameKind frame,
                                      const std::vector<GaussianRational>& u_tilde_samples, int box_bound,
                                      int c_norm_bound);

}  // namespace k3lcs
