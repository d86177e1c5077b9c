#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "origami/arith.hpp"
#include "origami/orbit.hpp"

using namespace origami;

namespace {
const StratumSignature kH2{std::vector<int>{2}, 2};
const StratumSignature kH11{std::vector<int>{1, 1}, 2};
} // namespace

TEST_CASE("three-square orbit") {
    Origami seed = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    Orbit o = enumerate_orbit(seed, GeneratorSet::Parabolic);
    REQUIRE(o.size() == 3);
    std::set<Origami> expect;
    expect.insert(canonical_form(make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3))).form);
    expect.insert(canonical_form(make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2)", 3))).form);
    expect.insert(canonical_form(make_origami(parse_cycles("(1,2,3)", 3), parse_cycles("(2,3)", 3))).form);
    std::set<Origami> got;
    for (const auto& m : o.members) got.insert(m.form);
    CHECK(got == expect);

    OrbitGraph g = build_graph(o);
    CHECK(g.vertices == 3);
    CHECK(g.edges.size() == 6);
    CHECK(g.loop_count() == 2);
    CHECK(g.four_regular());
    CHECK(g.connected());
}

TEST_CASE("orbit size is independent of the seed and worker count") {
    Orbit a1 = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 0), GeneratorSet::Parabolic, 1);
    CHECK(a1.size() == 18);
    CHECK(a1.label.empty()); // label assigned by census paths
    // Another member of the same orbit as seed.
    Orbit a2 = enumerate_orbit(a1.members[5].form, GeneratorSet::Parabolic, 3);
    REQUIRE(a2.size() == a1.size());
    for (int i = 0; i < a1.size(); ++i) CHECK(a1.members[i].form == a2.members[i].form);
    for (int i = 0; i < a1.size(); ++i) CHECK(a1.edges[i] == a2.edges[i]);

    Orbit b = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 1), GeneratorSet::Parabolic);
    CHECK(b.size() == 9);
}

TEST_CASE("orbit members share stratum, primitivity and HLK multiset") {
    Orbit o = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 1), GeneratorSet::Parabolic);
    HLKInvariant ref = hlk_invariant(o.members.front().form);
    for (const auto& m : o.members) {
        CHECK(stratum_and_genus(m.form) == o.stratum);
        CHECK(generators_primitive({m.form.h, m.form.v}));
        CHECK(hlk_invariant(m.form).unordered_triple == ref.unordered_triple);
        CHECK(hlk_invariant(m.form).l0 == ref.l0);
    }
}

TEST_CASE("non-primitive seeds are rejected") {
    // Dihedral monodromy with blocks {1,3},{2,4}: imprimitive.
    Origami cover = make_origami(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4));
    CHECK_THROWS_AS(enumerate_orbit(cover, GeneratorSet::Parabolic), BadParams);
}

TEST_CASE("brute stratum enumeration matches the classification at small n") {
    StratumCensus c4 = enumerate_stratum_brute(4, kH2);
    REQUIRE(c4.orbits.size() == 1);
    CHECK(c4.orbits[0].size() == 9);
    CHECK(c4.orbits[0].label == "single");

    StratumCensus c5 = enumerate_stratum_brute(5, kH2);
    REQUIRE(c5.orbits.size() == 2);
    CHECK(c5.orbits[0].size() == 9);
    CHECK(c5.orbits[0].label == "B");
    CHECK(c5.orbits[1].size() == 18);
    CHECK(c5.orbits[1].label == "A");

    CHECK_THROWS_AS(enumerate_stratum_brute(11, kH2), CapExceeded);
}

TEST_CASE("brute and complete H(2) enumerations agree") {
    for (int n = 3; n <= 8; ++n) {
        StratumCensus brute = enumerate_stratum_brute(n, kH2);
        StratumCensus sweep = enumerate_h2_complete(n);
        REQUIRE(brute.orbits.size() == sweep.orbits.size());
        CHECK(brute.surfaces == sweep.surfaces);
        for (size_t i = 0; i < brute.orbits.size(); ++i) {
            CHECK(brute.orbits[i].size() == sweep.orbits[i].size());
            CHECK(brute.orbits[i].members.front().form == sweep.orbits[i].members.front().form);
        }
    }
}

TEST_CASE("seeded enumeration covers what brute finds in H(1,1)") {
    for (int n = 7; n <= 8; ++n) {
        StratumCensus brute = enumerate_stratum_brute(n, kH11);
        StratumCensus seeded = enumerate_stratum_seeded(n, kH11, scan_seeds(n, kH11));
        REQUIRE(brute.orbits.size() == seeded.orbits.size());
        for (size_t i = 0; i < brute.orbits.size(); ++i)
            CHECK(brute.orbits[i].size() == seeded.orbits[i].size());
    }
}

TEST_CASE("H(1,1) orbit sizes match the closed forms at n = 7") {
    StratumCensus c = enumerate_stratum_brute(7, kH11);
    REQUIRE(c.orbits.size() == 2);
    CHECK(c.orbits[0].size() ==
          arith::predicted_orbit_size(arith::OrbitFamily::Zmiaikou_Alt, {7, 0, 0}));
    CHECK(c.orbits[1].size() ==
          arith::predicted_orbit_size(arith::OrbitFamily::Zmiaikou_Sym, {7, 0, 0}));
    CHECK(c.orbits[0].label == "Alt");
    CHECK(c.orbits[1].label == "Sym");
}

TEST_CASE("block systems on the n=4 H(2) orbit") {
    StratumCensus c4 = enumerate_h2_complete(4);
    BlockSystemReport rep = check_block_systems(c4.orbits[0]);
    bool saw_three_blocks = false;
    for (const auto& chk : rep.checks) {
        if (chk.name.find("hlk-three-blocks") != std::string::npos) {
            saw_three_blocks = true;
            CHECK(chk.applicable);
            CHECK(chk.passed);
        }
        if (chk.name.find("minus-one-pairing") != std::string::npos) CHECK_FALSE(chk.applicable);
    }
    CHECK(saw_three_blocks);
    CHECK(rep.all_passed());
}

TEST_CASE("block partitions are generator invariant by construction checks") {
    // Parity blocks on the H(1,1) n=7 Sym orbit.
    StratumCensus c = enumerate_stratum_brute(7, kH11);
    const Orbit* sym = nullptr;
    for (const Orbit& o : c.orbits)
        if (o.label == "Sym") sym = &o;
    REQUIRE(sym != nullptr);
    BlockSystemReport rep = check_block_systems(*sym);
    for (const auto& chk : rep.checks) {
        if (chk.name.find("parity-three-blocks") != std::string::npos) {
            CHECK(chk.applicable);
            CHECK(chk.passed);
        }
        if (chk.name.find("doubly-one-cylinder") != std::string::npos) {
            CHECK(chk.applicable);
            CHECK(chk.passed);
        }
    }
}
