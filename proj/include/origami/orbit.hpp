#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "origami/origami.hpp"
#include "origami/sl2z.hpp"

namespace origami {

enum class GeneratorSet { Parabolic, Elliptic };

/// Generator letters for a set: {T, S} or {R, U}.
std::array<sl2z::Letter, 2> generator_letters(GeneratorSet g);

struct Orbit {
    std::vector<CanonicalOrigami> members; // sorted by canonical (h, v)
    GeneratorSet generators = GeneratorSet::Parabolic;
    /// edges[i][k] = member index of the k-th generator image of member i.
    std::vector<std::array<int, 2>> edges;
    StratumSignature stratum;
    std::string label; // "A", "B", "single", "Alt", "Sym", or ""

    int size() const { return static_cast<int>(members.size()); }
    /// Index of the member isomorphic to x, or -1.
    int index_of(const Origami& x) const;
    int index_of_canonical(const Origami& canonical_pair) const;
};

/// Breadth-first closure under the generators and their inverses with
/// canonical-form deduplication. Deterministic for any worker count.
Orbit enumerate_orbit(const Origami& seed, GeneratorSet generators, int workers = 1);

/// HLK-based label for H(2) orbits ("A", "B", "single"), monodromy label
/// ("Alt"/"Sym") elsewhere; "" when nothing applies.
std::string classify_orbit_label(const Orbit& orbit);

struct OrbitGraph {
    struct Edge {
        int u = 0, v = 0;
        sl2z::Letter label = sl2z::Letter::T;
        bool loop = false;
    };
    int vertices = 0;
    std::vector<Edge> edges; // one per (vertex, generator) incidence

    int loop_count() const;
    bool four_regular() const;
    bool connected() const;
};

/// One undirected edge per (vertex, generator); loops count twice toward the
/// degree, generator 2-cycles give parallel edges.
OrbitGraph build_graph(const Orbit& orbit);

// ---------------------------------------------------------------------------
// Stratum enumeration

struct StratumCensus {
    std::vector<Orbit> orbits; // sorted by (size, first member)
    long long surfaces = 0;    // primitive surfaces counted across orbits
};

struct BruteOptions {
    int cap = 10; // maximum n for the generic sweep
    bool primitive_only = true;
};

/// Generic exhaustive mode: h over cycle-type representatives, v over all
/// permutations, filtered by stratum, transitivity and primitivity, then
/// partitioned into orbits. Throws CapExceeded above the cap.
StratumCensus enumerate_stratum_brute(int n, const StratumSignature& stratum,
                                      const BruteOptions& opts = {});

/// Closure of the given seeds (each must lie in the stratum).
StratumCensus enumerate_stratum_seeded(int n, const StratumSignature& stratum,
                                       const std::vector<Origami>& seeds, int workers = 1);

/// Every H(2) origami with n squares, via the complete one- and two-cylinder
/// diagram sweeps; primitive filtering and orbit partition included. Exact
/// for any n (no cap); used where the acceptance criteria outrun the generic
/// brute mode.
StratumCensus enumerate_h2_complete(int n, int workers = 1);
std::vector<Origami> all_h2_origamis(int n);

/// Deterministic small-support seed scan: h runs over a fixed list of cycle
/// shapes, v over permutations of small windows; returns primitive origamis
/// in the stratum, deduplicated by canonical form.
std::vector<Origami> scan_seeds(int n, const StratumSignature& stratum, int max_results = 64);

/// Full v-sweep over the given h cycle shapes (one conjugacy representative
/// each), keeping primitive members of the stratum that satisfy `accept`;
/// stops after max_results canonical representatives. Deterministic.
std::vector<Origami> scan_seeds_full(int n, const StratumSignature& stratum,
                                     const std::vector<std::vector<int>>& shapes,
                                     const std::function<bool(const Origami&)>& accept,
                                     int max_results = 1);

// ---------------------------------------------------------------------------
// Block systems (Props 3.1-3.4)

struct BlockSystemCheck {
    std::string name;
    bool applicable = false;
    bool passed = false;
    std::string detail;
};

struct BlockSystemReport {
    std::vector<BlockSystemCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }
};

/// Verifies each applicable block system: partition, generator invariance,
/// and the expected quotient dynamics. Requires a
/// parabolic-generator orbit.
BlockSystemReport check_block_systems(const Orbit& orbit);

} // namespace origami
