#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "origami/census.hpp"

using namespace origami;
using arith::Rational;

namespace {

Orbit g3() {
    return enumerate_orbit(make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3)),
                           GeneratorSet::Parabolic);
}

} // namespace

TEST_CASE("G3 censuses") {
    Orbit o = g3();
    auto cusps = cusp_census(o);
    REQUIRE(cusps.size() == 2);
    CHECK(cusps[0].width == 1);
    CHECK(cusps[1].width == 2);
    int total = 0;
    for (const auto& c : cusps) total += static_cast<int>(c.members.size());
    CHECK(total == o.size());

    auto counts = cycle_census(build_graph(o), 4);
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 2);

    // All three members fixed by S^2T^2; none by (ST)^2.
    CHECK(fixed_members(o, sl2z::parse_word("S^2T^2")).size() == 3);
    CHECK(fixed_members(o, sl2z::parse_word("(ST)^2")).empty());
}

TEST_CASE("cycle census on a known graph") {
    // K4: four triangles and three quadrilaterals.
    OrbitGraph k4;
    k4.vertices = 4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.edges.push_back({u, v, sl2z::Letter::T, false});
    auto counts = cycle_census(k4, 4);
    CHECK(counts[0] == 0);
    CHECK(counts[1] == 0);
    CHECK(counts[2] == 4);
    CHECK(counts[3] == 3);
}

TEST_CASE("path graph has no cycles") {
    OrbitGraph g;
    g.vertices = 4;
    for (int i = 0; i + 1 < 4; ++i) g.edges.push_back({i, i + 1, sl2z::Letter::T, false});
    auto counts = cycle_census(g, 4);
    for (long long c : counts) CHECK(c == 0);
}

TEST_CASE("genus lower bound arithmetic") {
    CHECK(genus_lower_bound(100, {0, 0, 0, 0}, 5) == 11);
    CHECK(genus_lower_bound(12, {0, 6, 0, 0}, 5) == 0);
    CHECK(genus_lower_bound(3, {2, 2, 2, 2}, 5) == 0);
    // Non-integer positive bound rounds up.
    CHECK(genus_lower_bound(104, {0, 0, 0, 0}, 5) == 12); // 1 + 10.4
}

TEST_CASE("curve invariants of G3") {
    CurveInvariants ci = curve_invariants(g3());
    CHECK(ci.V == 3);
    CHECK(ci.chi == Rational(-1, 2));
    CHECK(ci.e2 == 1);
    CHECK(ci.e3 == 0);
    CHECK(ci.cusps == 2);
    CHECK(ci.genus == 0);

    auto inventory = elliptic_face_inventory(ci, cusp_census(g3()));
    CHECK(inventory[0] == 1);            // one R-loop
    CHECK(inventory[1] == 2);            // one R^2 bigon + one width-1 RU bigon
    CHECK(inventory[2] == 1);            // one U^3 triangle
    CHECK(inventory[3] == 1);            // the width-2 cusp face
    CHECK(genus_lower_bound(3, inventory, 13) == 0);
}

TEST_CASE("curve invariants require -I") {
    // A primitive H(1,1)-like pair without -I does not exist in genus 2;
    // use an H(4) pair instead.
    Origami x = make_origami(parse_cycles("(1,2,3,4,5,6,7)", 7), parse_cycles("(1,2,4)", 7));
    REQUIRE(stratum_and_genus(x).zero_orders == std::vector<int>{4});
    if (!has_minus_one(x)) {
        Orbit o = enumerate_orbit(x, GeneratorSet::Parabolic);
        CHECK_THROWS_AS(curve_invariants(o), NotMinusISymmetric);
    }
}

TEST_CASE("word census counts by class") {
    Orbit o = g3();
    auto rows = word_census(o, 2);
    bool saw_t = false;
    for (const auto& r : rows) {
        if (r.word.to_string() == "T") {
            saw_t = true;
            CHECK(r.fixed_members.size() == 1);
        }
    }
    CHECK(saw_t);
}

TEST_CASE("loop counts equal T-fixed plus S-fixed members") {
    Orbit a = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 0), GeneratorSet::Parabolic);
    OrbitGraph g = build_graph(a);
    auto t_fixed = fixed_members(a, sl2z::parse_word("T"));
    auto s_fixed = fixed_members(a, sl2z::parse_word("S"));
    CHECK(g.loop_count() ==
          static_cast<int>(t_fixed.size()) + static_cast<int>(s_fixed.size()));
}

TEST_CASE("cusp width histograms match the ellipse sweeps") {
    // Two independent routes to the number of two-cylinder surfaces sitting
    // in cusps of each small width: the T-orbit partition of the enumerated
    // orbits, and the arithmetic sweep over height multipliers.
    for (int n = 4; n <= 12; ++n) {
        StratumCensus census = enumerate_h2_complete(n);
        for (int width = 1; width <= 4; ++width) {
            long long census_count = 0;
            for (const Orbit& o : census.orbits)
                for (const CuspInfo& c : cusp_census(o))
                    if (c.width == width && c.normalized) // two-cylinder cusps only
                        census_count += static_cast<long long>(c.members.size());
            long long sweep_count = arith::t_fixed_count_h2(n, width).surfaces.size();
            INFO("n = ", n, " width = ", width);
            CHECK(census_count == sweep_count);
        }
    }
}

TEST_CASE("ST^-2S fixed members sit in width <= 2 cusps") {
    for (const H2Params seed : {H2Params{1, 1, 0, 2, 2, 0}, H2Params{1, 1, 0, 2, 2, 1}}) {
        Orbit o = enumerate_orbit(from_h2_params(seed), GeneratorSet::Parabolic);
        auto fixed = fixed_members(o, sl2z::parse_word("ST^-2S"));
        auto cusps = cusp_census(o);
        long long members_in_narrow_cusps = 0;
        for (const auto& c : cusps)
            if (c.width <= 2) members_in_narrow_cusps += static_cast<long long>(c.members.size());
        CHECK(static_cast<long long>(fixed.size()) <= members_in_narrow_cusps);
    }
}
