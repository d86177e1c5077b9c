#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/arith.hpp"
#include "origami/orbit.hpp"
#include "origami/sl2z.hpp"

namespace origami {

struct WordFixCount {
    sl2z::SL2Word word;
    sl2z::WordClass info;
    std::vector<int> fixed_members; // orbit indices with w(X) isomorphic to X
};

struct CuspInfo {
    int width = 0;
    std::vector<int> members; // orbit indices, T-cycle order from the smallest
    CanonicalOrigami representative;
    std::optional<H2Params> normalized; // twist-normalized parameters (H(2), 2-cyl)
};

/// Orbit indices fixed (up to isomorphism) by this exact word.
std::vector<int> fixed_members(const Orbit& orbit, const sl2z::SL2Word& word);

/// Fixed counts for every reduced word class of length <= max_len.
std::vector<WordFixCount> word_census(const Orbit& orbit, int max_len,
                                      sl2z::Alphabet alphabet = sl2z::Alphabet::Parabolic);

/// Partition of the members into T-orbits.
std::vector<CuspInfo> cusp_census(const Orbit& orbit);

/// Closed walks with pairwise-distinct edges up to rotation and reflection,
/// counted by length 1..max_len. An upper bound for the number of faces of
/// each length in any embedding.
std::vector<long long> cycle_census(const OrbitGraph& graph, int max_len);

/// Lower bound on the graph genus from V, the short-cycle counts
/// c_1..c_{target-1} and the 4-regular degree sum: the bound expression
/// 1 + (V - sum (target-i) c_i) / (2 target), rounded up; values below one
/// carry no information and give 0.
long long genus_lower_bound(long long V, const std::vector<long long>& counts, int girth_target);

struct CurveInvariants {
    long long V = 0;
    arith::Rational chi;
    long long e2 = 0;
    long long e3 = 0;
    long long cusps = 0;
    long long genus = 0;
};

/// Teichmueller-curve invariants from the orbit: V, chi = -V/6,
/// e2 = #R-fixed, e3 = #U-fixed, c = #T-orbits and the genus formula
/// V/12 - e2/4 - e3/3 - c/2 + 1. Requires -I in the Veech group; verifies
/// the R/U local structure (R-cycles of length 1 or 2, U-cycles of length
/// 1 or 3) and genus integrality.
CurveInvariants curve_invariants(const Orbit& orbit);

/// Face-length inventory c_1..c_12 of the elliptic-generator graph assembled
/// from e2, e3 and the cusp widths: loops, R^2 and RU bigons, U^3 triangles,
/// and one face of length 2w per cusp of width w.
std::vector<long long> elliptic_face_inventory(const CurveInvariants& ci,
                                               const std::vector<CuspInfo>& cusps);

} // namespace origami
