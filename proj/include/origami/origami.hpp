#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

/// A square-tiled surface: a transitive pair (h, v). h glues square i's right
/// side to h(i)'s left side; v glues i's top side to v(i)'s bottom side.
struct Origami {
    Permutation h;
    Permutation v;

    int squares() const { return h.degree(); }

    friend bool operator==(const Origami& a, const Origami& b) {
        return a.h == b.h && a.v == b.v;
    }
    friend bool operator<(const Origami& a, const Origami& b) {
        if (a.h != b.h) return a.h < b.h;
        return a.v < b.v;
    }
};

/// Validates connectivity. Throws NotConnected / DegreeMismatch.
Origami make_origami(Permutation h, Permutation v);

/// Same pair without the transitivity requirement (for torus covers etc. that
/// appear as intermediate values in tests).
Origami make_origami_unchecked(Permutation h, Permutation v);

struct CanonicalOrigami {
    Origami form;
    std::uint64_t digest = 0;

    friend bool operator==(const CanonicalOrigami& a, const CanonicalOrigami& b) {
        return a.form == b.form;
    }
    friend bool operator<(const CanonicalOrigami& a, const CanonicalOrigami& b) {
        return a.form < b.form;
    }
};

/// Lexicographically least relabeling over BFS traversals from every start
/// square along (h, v, h^-1, v^-1). Two origamis have equal canonical forms
/// iff they are isomorphic (simultaneously conjugate).
CanonicalOrigami canonical_form(const Origami& x);

/// FNV-1a over (n, h images, v images); stable across runs and platforms.
std::uint64_t origami_digest(const Origami& x);

Origami relabel(const Origami& x, const Permutation& sigma);
bool isomorphic(const Origami& a, const Origami& b);

struct StratumSignature {
    std::vector<int> zero_orders; // ascending multiset of k_i >= 1
    int genus = 1;

    friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
        return a.zero_orders == b.zero_orders;
    }
    friend bool operator!=(const StratumSignature& a, const StratumSignature& b) {
        return !(a == b);
    }
};

/// Corner permutation h v h^-1 v^-1; each k-cycle (k >= 2) is a zero of order
/// k-1 and genus = (2 + n - #cycles)/2.
StratumSignature stratum_and_genus(const Origami& x);
Permutation corner_permutation(const Origami& x);

std::string stratum_to_string(const StratumSignature& s);

enum class MonodromyKind { Alt, Sym, Other };

struct MonodromyClass {
    MonodromyKind kind = MonodromyKind::Other;
    GroupOrder order = 1;
    bool primitive = false;
};

MonodromyClass monodromy_class(const Origami& x);

/// -I action: (h, v) -> (h^-1, v^-1).
Origami minus_one(const Origami& x);

/// True iff some involution sigma realizes -I: sigma h sigma^-1 = h^-1 and
/// sigma v sigma^-1 = v^-1 with sigma^2 = id.
bool has_minus_one(const Origami& x);

/// Fixed-point data of an anti-involution over the four 2-torsion points of
/// the torus. The ordered triple is (l over (0,1/2), l over (1/2,1/2),
/// l over (1/2,0)); l0 counts fixed regular vertex classes only, with fixed
/// cone classes reported separately in singular_fixed.
struct HLKInvariant {
    int l0 = 0;
    int singular_fixed = 0;
    std::array<int, 3> ordered_triple{0, 0, 0};
    std::array<int, 3> unordered_triple{0, 0, 0}; // ascending

    int total_fixed_points() const {
        return l0 + singular_fixed + ordered_triple[0] + ordered_triple[1] + ordered_triple[2];
    }
    friend bool operator==(const HLKInvariant& a, const HLKInvariant& b) {
        return a.l0 == b.l0 && a.singular_fixed == b.singular_fixed &&
               a.ordered_triple == b.ordered_triple;
    }
    friend bool operator<(const HLKInvariant& a, const HLKInvariant& b) {
        if (a.l0 != b.l0) return a.l0 < b.l0;
        return a.ordered_triple < b.ordered_triple;
    }
};

/// "(2,[1,1,1])" (unordered form).
std::string hlk_to_string(const HLKInvariant& inv);

HLKInvariant hlk_for_involution(const Origami& x, const Permutation& sigma);

/// All involutions realizing -I, each with its invariant; empty when -I is
/// not a symmetry.
std::vector<std::pair<Permutation, HLKInvariant>> hlk_invariants_all(const Origami& x);

/// Throws NoInvolution when -I is not realized, AmbiguousInvolution when
/// distinct involutions give different invariants.
HLKInvariant hlk_invariant(const Origami& x);

struct Cylinder {
    int width = 0;
    int height = 0;
    int twist = 0;                // 0 <= twist < width
    std::vector<int> bottom_row;  // 1-indexed squares of the bottom row
};

struct CylinderDecomposition {
    std::vector<Cylinder> cylinders; // sorted by (width, height, twist)
};

/// Horizontal cylinders: rows are h-cycles, merged when v conjugates the
/// h-translation across the shared boundary. Twists follow the boundary
/// corner-mark convention described in the implementation.
CylinderDecomposition cylinder_decomposition(const Origami& x);

/// Number of vertical cylinders (horizontal cylinders of the quarter-turned
/// surface).
int vertical_cylinder_count(const Origami& x);

struct H2Params {
    int w1 = 0, h1 = 0, t1 = 0;
    int w2 = 0, h2 = 0, t2 = 0;

    friend bool operator==(const H2Params& a, const H2Params& b) {
        return a.w1 == b.w1 && a.h1 == b.h1 && a.t1 == b.t1 && a.w2 == b.w2 && a.h2 == b.h2 &&
               a.t2 == b.t2;
    }
    friend bool operator<(const H2Params& a, const H2Params& b) {
        return std::tie(a.w1, a.h1, a.t1, a.w2, a.h2, a.t2) <
               std::tie(b.w1, b.h1, b.t1, b.w2, b.h2, b.t2);
    }
    std::string to_string() const;
};

/// Two-cylinder H(2) origami with the fixed square numbering: bottom (wide)
/// cylinder first, row-major. Requires w1 < w2, h_i >= 1, 0 <= t_i < w_i.
Origami from_h2_params(int w1, int h1, int t1, int w2, int h2, int t2);
Origami from_h2_params(const H2Params& p);

/// Recovers the parameters of a two-cylinder H(2) origami; empty if the
/// origami is not of that shape. Deterministic (lexicographically least
/// matching parameter tuple).
std::optional<H2Params> h2_params_of(const Origami& x);

struct CuspData {
    int width = 0;
    CanonicalOrigami representative;
};

/// width = least k > 0 with T^k(X) isomorphic to X. The representative is the
/// twist-normalized surface (0 <= t_i < gcd(w_i,h_i)) for two-cylinder H(2)
/// origamis and the canonical-form-minimal element of the T-orbit otherwise.
CuspData cusp_data(const Origami& x);

} // namespace origami
