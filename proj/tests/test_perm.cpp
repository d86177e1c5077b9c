#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "origami/perm.hpp"

using namespace origami;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

// Brute-force closure oracle for small groups.
std::set<Permutation> closure(const std::vector<Permutation>& gens) {
    std::set<Permutation> group(gens.begin(), gens.end());
    group.insert(Permutation::identity(gens.front().degree()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> snapshot(group.begin(), group.end());
        for (const Permutation& a : snapshot)
            for (const Permutation& g : gens)
                if (group.insert(compose(g, a)).second) grew = true;
    }
    return group;
}

} // namespace

TEST_CASE("composition applies the right factor first") {
    Permutation a = parse_cycles("(2,3)", 3);
    Permutation b = parse_cycles("(1,2,3)", 3);
    CHECK(compose(a, b) == parse_cycles("(1,3)", 3));
    CHECK(compose(a, Permutation::identity(3)) == a);
    CHECK(compose(parse_cycles("(1,2,3)", 3), parse_cycles("(1,3,2)", 3)) ==
          Permutation::identity(3));
}

TEST_CASE("composition errors on mixed degrees") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle data") {
    CycleData d = cycle_data(parse_cycles("(1,2)(3,4,5)", 5));
    CHECK(d.cycle_type == std::vector<int>{2, 3});
    CHECK(d.parity == Parity::Odd);

    d = cycle_data(Permutation::identity(4));
    CHECK(d.cycle_type == std::vector<int>{1, 1, 1, 1});
    CHECK(d.parity == Parity::Even);

    d = cycle_data(parse_cycles("(1,2,3,4,5)", 5));
    CHECK(d.cycle_type == std::vector<int>{5});
    CHECK(d.parity == Parity::Even);
}

TEST_CASE("composition properties on random permutations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Permutation p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, q).inverse() == compose(q.inverse(), p.inverse()));
        CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    }
}

TEST_CASE("group order matches the brute-force closure at small degree") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Permutation> gens{random_perm(n, rng), random_perm(n, rng)};
        GroupDescription d = group_describe(gens);
        CHECK(d.order == static_cast<GroupOrder>(closure(gens).size()));
    }
}

TEST_CASE("group_describe on the pinned examples") {
    GroupDescription a5 =
        group_describe({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(3,4,5)", 5)});
    CHECK(a5.order == 60);
    CHECK(a5.transitive);
    CHECK(a5.primitive);

    GroupDescription d4 = group_describe({parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)});
    CHECK(d4.order == 8);
    CHECK(d4.transitive);
    CHECK_FALSE(d4.primitive);
    REQUIRE(d4.minimal_blocks.has_value());
    CHECK(*d4.minimal_blocks == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

    GroupDescription c3 = group_describe({parse_cycles("(1,2,3)", 3)});
    CHECK(c3.order == 3);
    CHECK(c3.transitive);
    CHECK(c3.primitive); // prime degree transitive cyclic

    GroupDescription intrans = group_describe({parse_cycles("(1,2)", 4)});
    CHECK_FALSE(intrans.transitive);
    CHECK_FALSE(intrans.primitive);
}

TEST_CASE("returned blocks are invariant under every generator") {
    std::vector<Permutation> gens{parse_cycles("(1,2,3,4,5,6)", 6), parse_cycles("(1,4)", 6)};
    GroupDescription d = group_describe(gens);
    if (d.minimal_blocks) {
        for (const auto& block : *d.minimal_blocks) {
            for (const Permutation& g : gens) {
                std::set<int> image;
                for (int s : block) image.insert(g(s - 1) + 1);
                bool found = false;
                for (const auto& other : *d.minimal_blocks)
                    if (std::set<int>(other.begin(), other.end()) == image) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("pair conjugators") {
    auto a = std::make_pair(parse_cycles("(1,3,2)", 3), parse_cycles("(1,2)", 3));
    auto b = std::make_pair(parse_cycles("(1,2,3)", 3), parse_cycles("(2,3)", 3));
    auto sigmas = pair_conjugators(a, b);
    bool contains_13 = false;
    for (const Permutation& s : sigmas) {
        CHECK(conjugate(s, a.first) == b.first);
        CHECK(conjugate(s, a.second) == b.second);
        if (s == parse_cycles("(1,3)", 3)) contains_13 = true;
    }
    CHECK(contains_13);
    CHECK(std::is_sorted(sigmas.begin(), sigmas.end()));

    auto c = std::make_pair(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    auto self = pair_conjugators(c, c);
    bool has_id = false;
    for (const Permutation& s : self)
        if (s.is_identity()) has_id = true;
    CHECK(has_id);

    auto d1 = std::make_pair(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2));
    auto d2 = std::make_pair(parse_cycles("(1,2)", 2), Permutation::identity(2));
    CHECK(pair_conjugators(d1, d2).empty());
}

TEST_CASE("conjugator cycle types always agree") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto a = std::make_pair(random_perm(n, rng), random_perm(n, rng));
        Permutation s = random_perm(n, rng);
        auto b = std::make_pair(conjugate(s, a.first), conjugate(s, a.second));
        auto sigmas = pair_conjugators(a, b);
        REQUIRE(!sigmas.empty());
        for (const Permutation& sig : sigmas) {
            CHECK(conjugate(sig, a.first) == b.first);
            CHECK(conjugate(sig, a.second) == b.second);
        }
    }
}

TEST_CASE("pair conjugators match the brute-force oracle") {
    // All sigma at once, including intransitive pairs and empty results.
    std::mt19937 rng(41);
    auto all_perms = [](int n) {
        std::vector<Permutation> out;
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        do {
            out.push_back(Permutation(im));
        } while (std::next_permutation(im.begin(), im.end()));
        return out;
    };
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4); // degree <= 5
        auto a = std::make_pair(random_perm(n, rng), random_perm(n, rng));
        auto b = trial % 3 == 0
                     ? std::make_pair(random_perm(n, rng), random_perm(n, rng))
                     : a;
        std::vector<Permutation> oracle;
        for (const Permutation& s : all_perms(n))
            if (conjugate(s, a.first) == b.first && conjugate(s, a.second) == b.second)
                oracle.push_back(s);
        CHECK(pair_conjugators(a, b) == oracle);
    }
}

TEST_CASE("cycle text round trip") {
    CHECK(format_cycles(parse_cycles("(2,3)", 3)) == "(2,3)");
    CHECK(format_cycles(Permutation::identity(5)) == "()");
    CHECK(format_cycles(parse_cycles("(1,2)(3,4,5)", 5)) == "(1,2)(3,4,5)");
    CHECK(parse_cycles("(1, 2) (3,4 ,5)", 5) == parse_cycles("(1,2)(3,4,5)", 5));
    CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
}
