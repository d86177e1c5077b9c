#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "origami/sl2z.hpp"

using namespace origami;
using namespace origami::sl2z;

namespace {

Origami fig1() { return make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3)); }

SL2Word random_word(std::mt19937& rng, int max_len) {
    const Letter alphabet[4] = {Letter::T, Letter::Tinv, Letter::S, Letter::Sinv};
    SL2Word w;
    int len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i) w.letters.push_back(alphabet[rng() % 4]);
    return w;
}

Origami random_origami(int n, std::mt19937& rng) {
    for (;;) {
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        try {
            return make_origami(Permutation(a), Permutation(b));
        } catch (const NotConnected&) {
        }
    }
}

} // namespace

TEST_CASE("generator matrices") {
    CHECK(parse_word("T^-1ST^-1").matrix() == mat_R());
    CHECK(parse_word("TS^-1").matrix() == mat_U());
    CHECK(parse_word("ST^-1S").matrix() == mat_R());
    WordClass u = word_info(parse_word("TS^-1"));
    REQUIRE(u.order.has_value());
    CHECK(*u.order == 6);
    WordClass r = word_info(parse_word("T^-1ST^-1"));
    CHECK(r.kind == WordKind::Elliptic);
    REQUIRE(r.order.has_value());
    CHECK(*r.order == 4);
}

TEST_CASE("word classification") {
    CHECK(word_info(parse_word("T")).kind == WordKind::Parabolic);
    CHECK(word_info(parse_word("ST")).kind == WordKind::Hyperbolic);
    CHECK(word_info(parse_word("ST")).trace == 3);
    CHECK(word_info(parse_word("TT^-1")).kind == WordKind::CentralIdentity);
    CHECK(word_info(parse_word("R^2")).kind == WordKind::CentralMinusIdentity);
    CHECK(word_info(parse_word("ST^-2S")).kind == WordKind::Parabolic);
    CHECK(word_info(parse_word("ST^-2S")).trace == -2);
}

TEST_CASE("word parser") {
    CHECK(parse_word("S^2T^-1").to_string() == "S^2T^-1");
    CHECK(parse_word("(TS)^-1ST").matrix() ==
          parse_word("S^-1T^-1ST").matrix());
    CHECK(parse_word("(ST)^2").matrix() == parse_word("STST").matrix());
    CHECK_THROWS_AS(parse_word("X"), ParseError);
    CHECK_THROWS_AS(parse_word("(TS"), ParseError);
}

TEST_CASE("three-square generator actions") {
    Origami x = fig1();
    Origami tx = apply_word(parse_word("T"), x);
    CHECK(tx.h == parse_cycles("(2,3)", 3));
    CHECK(tx.v == parse_cycles("(1,2)", 3));
    CHECK(isomorphic(apply_word(parse_word("S"), x), x));
    CHECK(isomorphic(apply_word(parse_word("R^2"), x), minus_one(x)));
}

TEST_CASE("word action is a left action and respects relabeling") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Origami x = random_origami(n, rng);
        SL2Word w1 = random_word(rng, 3), w2 = random_word(rng, 3);
        SL2Word prod;
        prod.letters = w1.letters;
        prod.letters.insert(prod.letters.end(), w2.letters.begin(), w2.letters.end());
        CHECK(apply_word(prod, x) == apply_word(w1, apply_word(w2, x)));
        CHECK(prod.matrix() == w1.matrix() * w2.matrix());

        // Canonical form of the image depends only on the canonical form.
        Origami y = canonical_form(x).form;
        CHECK(canonical_form(apply_word(w1, x)).form == canonical_form(apply_word(w1, y)).form);
    }
}

TEST_CASE("reduced word classes reproduce the published lists") {
    auto words = reduced_words(4, Alphabet::Parabolic);
    std::map<WordKind, int> counts;
    for (const auto& rw : words) ++counts[rw.info.kind];
    CHECK(counts[WordKind::Hyperbolic] == 8);
    CHECK(counts[WordKind::Parabolic] == 9);
    CHECK(counts[WordKind::Elliptic] == 8);
    CHECK(counts[WordKind::CentralIdentity] == 0);
    CHECK(counts[WordKind::CentralMinusIdentity] == 0);

    // The elliptic list, as classes of cyclic words up to inversion.
    const char* elliptic[] = {"S^-1T",  "T^-1ST^-1", "ST^-1S",  "S^-1T^3",
                              "T^-1S^3", "S^-1TST",   "T^-1STS", "(S^-1T)^2"};
    std::map<SL2Word, const ReducedWord*> by_key;
    for (const auto& rw : words) by_key[class_key(rw.word)] = &rw;
    for (const char* text : elliptic) {
        SL2Word w = parse_word(text);
        auto it = by_key.find(class_key(w));
        REQUIRE(it != by_key.end());
        CHECK(it->second->info.kind == WordKind::Elliptic);
        CHECK(class_contains_matrix(*it->second, w.matrix()));
    }

    auto len1 = reduced_words(1, Alphabet::Parabolic);
    REQUIRE(len1.size() == 2);
    CHECK(len1[0].word.to_string() == "T");
    CHECK(len1[1].word.to_string() == "S");
}

TEST_CASE("elliptic alphabet words") {
    auto words = reduced_words(2, Alphabet::Elliptic);
    bool saw_r = false, saw_u = false;
    for (const auto& rw : words) {
        if (rw.word.to_string() == "R") {
            saw_r = true;
            CHECK(rw.info.kind == WordKind::Elliptic);
        }
        if (rw.word.to_string() == "U") {
            saw_u = true;
            REQUIRE(rw.info.order.has_value());
            CHECK(*rw.info.order == 6);
        }
    }
    CHECK(saw_r);
    CHECK(saw_u);
}
