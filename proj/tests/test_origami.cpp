#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "origami/origami.hpp"

using namespace origami;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

Origami random_origami(int n, std::mt19937& rng) {
    for (;;) {
        Permutation h = random_perm(n, rng), v = random_perm(n, rng);
        try {
            return make_origami(h, v);
        } catch (const NotConnected&) {
        }
    }
}

} // namespace

TEST_CASE("make_origami validation") {
    CHECK_NOTHROW(make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3)));
    CHECK_THROWS_AS(make_origami(parse_cycles("(1,2)", 3), parse_cycles("(1,2)", 3)),
                    NotConnected);
    CHECK_NOTHROW(make_origami(Permutation::identity(1), Permutation::identity(1)));
}

TEST_CASE("canonical form identifies exactly the isomorphic pairs") {
    Origami a = make_origami(parse_cycles("(1,3,2)", 3), parse_cycles("(1,2)", 3));
    Origami b = make_origami(parse_cycles("(1,2,3)", 3), parse_cycles("(2,3)", 3));
    CHECK(canonical_form(a).form == canonical_form(b).form);
    CHECK(!pair_conjugators({a.h, a.v}, {b.h, b.v}).empty());

    Origami x = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    CHECK(canonical_form(canonical_form(x).form).form == canonical_form(x).form);
}

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Origami x = random_origami(n, rng);
        Permutation sigma = random_perm(n, rng);
        CHECK(canonical_form(x).form == canonical_form(relabel(x, sigma)).form);
    }
}

TEST_CASE("canonical equality is exactly isomorphism") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Origami a = random_origami(n, rng), b = random_origami(n, rng);
        bool canon_equal = canonical_form(a).form == canonical_form(b).form;
        bool conj = !pair_conjugators({a.h, a.v}, {b.h, b.v}).empty();
        CHECK(canon_equal == conj);
    }
}

TEST_CASE("stratum and genus") {
    Origami x = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    StratumSignature s = stratum_and_genus(x);
    CHECK(s.zero_orders == std::vector<int>{2});
    CHECK(s.genus == 2);
    CHECK(cycle_data(corner_permutation(x)).cycle_type == std::vector<int>{3});

    Origami torus = make_origami(Permutation::identity(1), Permutation::identity(1));
    CHECK(stratum_and_genus(torus).zero_orders.empty());
    CHECK(stratum_and_genus(torus).genus == 1);

    Origami g7 =
        make_origami(parse_cycles("(1,2,3,4,5,6,7)", 7), parse_cycles("(4,5,6,7)", 7));
    CHECK(stratum_and_genus(g7).zero_orders == std::vector<int>{2});
}

TEST_CASE("stratum is invariant under relabeling") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Origami x = random_origami(n, rng);
        Permutation sigma = random_perm(n, rng);
        CHECK(stratum_and_genus(x) == stratum_and_genus(relabel(x, sigma)));
    }
}

TEST_CASE("monodromy classes") {
    MonodromyClass s3 =
        monodromy_class(make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3)));
    CHECK(s3.kind == MonodromyKind::Sym);
    CHECK(s3.order == 6);

    MonodromyClass a5 = monodromy_class(
        make_origami(parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(3,4,5)", 5)));
    CHECK(a5.kind == MonodromyKind::Alt);
    CHECK(a5.order == 60);

    MonodromyClass d4 =
        monodromy_class(make_origami(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)));
    CHECK(d4.kind == MonodromyKind::Other);
    CHECK(d4.order == 8);
    CHECK_FALSE(d4.primitive);
}

TEST_CASE("HLK invariants of the pinned H(2) surfaces") {
    HLKInvariant a = hlk_invariant(from_h2_params(1, 1, 0, 2, 2, 0));
    CHECK(hlk_to_string(a) == "(0,[3,1,1])");
    HLKInvariant b = hlk_invariant(from_h2_params(1, 1, 0, 2, 2, 1));
    CHECK(hlk_to_string(b) == "(2,[1,1,1])");
    // Hyperelliptic fixed-point count, cone point included.
    CHECK(a.total_fixed_points() == 6);
    CHECK(b.total_fixed_points() == 6);

    // Any primitive 4-square H(2) origami.
    HLKInvariant e = hlk_invariant(from_h2_params(1, 1, 0, 3, 1, 0));
    CHECK(hlk_to_string(e) == "(1,[2,2,0])");

    // A primitive H(4) origami without -I in its Veech group.
    Origami nosym = make_origami(parse_cycles("(1,2,3,4,5,6,7)", 7), parse_cycles("(1,2,4)", 7));
    CHECK_THROWS_AS(hlk_invariant(nosym), NoInvolution);
}

TEST_CASE("cylinder decomposition") {
    // One-cylinder surface: a single (n,1) cylinder.
    Origami one = make_origami(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4));
    CylinderDecomposition d = cylinder_decomposition(one);
    REQUIRE(d.cylinders.size() == 1);
    CHECK(d.cylinders[0].width == 4);
    CHECK(d.cylinders[0].height == 1);

    d = cylinder_decomposition(from_h2_params(1, 1, 0, 2, 2, 0));
    REQUIRE(d.cylinders.size() == 2);
    CHECK(d.cylinders[0].width == 1);
    CHECK(d.cylinders[0].height == 1);
    CHECK(d.cylinders[0].twist == 0);
    CHECK(d.cylinders[1].width == 2);
    CHECK(d.cylinders[1].height == 2);
    CHECK(d.cylinders[1].twist == 0);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Origami x = random_origami(n, rng);
        int area = 0;
        for (const Cylinder& c : cylinder_decomposition(x).cylinders) area += c.width * c.height;
        CHECK(area == n);
    }
}

TEST_CASE("from_h2_params round trip") {
    CHECK_THROWS_AS(from_h2_params(2, 1, 2, 3, 1, 0), BadParams); // t1 >= w1
    CHECK_THROWS_AS(from_h2_params(2, 1, 0, 2, 1, 0), BadParams); // w1 == w2
    CHECK_THROWS_AS(from_h2_params(1, 0, 0, 2, 1, 0), BadParams); // h1 == 0

    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int w1 = 1 + static_cast<int>(rng() % 4);
        int w2 = w1 + 1 + static_cast<int>(rng() % 4);
        int h1 = 1 + static_cast<int>(rng() % 3);
        int h2 = 1 + static_cast<int>(rng() % 3);
        int t1 = static_cast<int>(rng() % w1);
        int t2 = static_cast<int>(rng() % w2);
        H2Params p{w1, h1, t1, w2, h2, t2};
        Origami x = from_h2_params(p);
        CHECK(stratum_and_genus(x).zero_orders == std::vector<int>{2});
        auto q = h2_params_of(x);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("cusp widths") {
    CHECK(cusp_data(from_h2_params(1, 1, 0, 2, 2, 0)).width == 1);
    CHECK(cusp_data(from_h2_params(1, 1, 0, 2, 2, 1)).width == 1);
    CHECK(cusp_data(from_h2_params(1, 3, 0, 2, 1, 0)).width == 2);
    // lcm(2/gcd(2,1), 3/gcd(3,1)) = 6.
    CHECK(cusp_data(from_h2_params(2, 1, 0, 3, 1, 0)).width == 6);

    // One-cylinder primitive 4-square origami has cusp width 4.
    Origami one = make_origami(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4));
    REQUIRE(stratum_and_genus(one).zero_orders == std::vector<int>{2});
    CHECK(cusp_data(one).width == 4);

    // The cusp representative has both twists below gcd(w_i, h_i).
    CuspData cd = cusp_data(from_h2_params(2, 2, 1, 3, 3, 2));
    auto rep = h2_params_of(cd.representative.form);
    REQUIRE(rep.has_value());
    CHECK(rep->t1 < std::gcd(rep->w1, rep->h1));
    CHECK(rep->t2 < std::gcd(rep->w2, rep->h2));
}

TEST_CASE("minus one realization") {
    Origami x = make_origami(parse_cycles("(2,3)", 3), parse_cycles("(1,2,3)", 3));
    CHECK(has_minus_one(x));
    Origami m = minus_one(x);
    CHECK(isomorphic(x, m));
}
