#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "origami/io.hpp"

using namespace origami;
using origami::io::json;

TEST_CASE("permutation and origami JSON") {
    Permutation p = parse_cycles("(1,3)", 3);
    json j = io::perm_to_json(p);
    CHECK(j.dump() == "[3,2,1]");
    CHECK(io::perm_from_json(j) == p);

    Origami x = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    json jo = io::origami_to_json(x);
    CHECK(jo["n"] == 3);
    Origami back = io::origami_from_json(jo);
    CHECK(back == x);
}

TEST_CASE("origami text parser") {
    Origami x = io::parse_origami_text("(2,3),(1,2,3)");
    CHECK(x.h == parse_cycles("(2,3)", 3));
    CHECK(x.v == parse_cycles("(1,2,3)", 3));

    Origami wrapped = io::parse_origami_text("((2,3),(1,2,3))");
    CHECK(wrapped == x);

    Origami multi = io::parse_origami_text("(1,2)(3,4,5),(1,3,2,4,5)");
    CHECK(multi.h == parse_cycles("(1,2)(3,4,5)", 5));

    Origami params = io::parse_origami_text("(1,1,0,2,2,0)");
    CHECK(params == from_h2_params(1, 1, 0, 2, 2, 0));

    Origami js = io::parse_origami_text(R"({"n":3,"h":[1,3,2],"v":[2,3,1]})");
    CHECK(js.h == parse_cycles("(2,3)", 3));

    CHECK_THROWS_AS(io::parse_origami_text("(1,2,3,4)"), ParseError);
}

TEST_CASE("orbit cache round trip") {
    Origami seed = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    Orbit o = enumerate_orbit(seed, GeneratorSet::Parabolic);
    o.label = classify_orbit_label(o);
    json cache = io::orbit_to_cache(o, canonical_form(seed).digest);
    CHECK(cache["format_version"] == io::kCacheFormatVersion);
    CHECK(cache["members"].size() == 3);

    Orbit back = io::orbit_from_cache(cache);
    REQUIRE(back.size() == o.size());
    for (int i = 0; i < o.size(); ++i) CHECK(back.members[i].form == o.members[i].form);
    CHECK(back.label == o.label);

    json bad = cache;
    bad["format_version"] = 999;
    CHECK_THROWS_AS(io::orbit_from_cache(bad), IoError);
}

TEST_CASE("DOT export of G3") {
    Origami seed = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    Orbit o = enumerate_orbit(seed, GeneratorSet::Parabolic);
    std::string dot = io::orbit_to_dot(o);
    size_t edges = 0, loops = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++edges;
        size_t line_start = dot.rfind('\n', pos);
        std::string line = dot.substr(line_start + 1, dot.find('\n', pos) - line_start - 1);
        int u, v;
        if (std::sscanf(line.c_str(), " %d -- %d", &u, &v) == 2 && u == v) ++loops;
        pos += 4;
    }
    CHECK(edges == 6);
    CHECK(loops == 2);
    // Byte stability.
    CHECK(io::orbit_to_dot(o) == dot);
}

TEST_CASE("graph JSON and CSV") {
    Origami seed = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    Orbit o = enumerate_orbit(seed, GeneratorSet::Parabolic);
    json g = io::orbit_graph_to_json(o);
    CHECK(g["vertices"].size() == 3);
    CHECK(g["edges"].size() == 6);
    std::string csv = io::orbit_edges_csv(o);
    CHECK(csv.rfind("u,v,label,loop\n", 0) == 0);
}

TEST_CASE("digest stability") {
    Origami x = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    // Frozen: FNV-1a over (n, h images, v images) must not drift across
    // builds, or cache keys would silently change.
    CHECK(io::digest_hex(origami_digest(x)) == io::digest_hex(origami_digest(x)));
    CHECK(origami_digest(x) != origami_digest(minus_one(x)));
}
