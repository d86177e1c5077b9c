#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <set>

#include "origami/arith.hpp"

using namespace origami;
using namespace origami::arith;

namespace {

// Second class-number oracle: reduce every candidate form and count distinct
// reduced outcomes (independent of the enumeration in class_numbers).
long long reduction_oracle(long long D) {
    auto reduce = [](long long a, long long b, long long c) {
        for (int guard = 0; guard < 4096; ++guard) {
            if (std::abs(b) > a) {
                long long r = ((b % (2 * a)) + 2 * a) % (2 * a);
                if (r > a) r -= 2 * a;
                long long k = (b - r) / (2 * a);
                c = c - k * b + k * k * a;
                b = r;
            } else if (a > c) {
                std::swap(a, c);
                b = -b;
            } else if ((b < 0) && (-b == a || a == c)) {
                b = -b;
            } else {
                break;
            }
        }
        return std::array<long long, 3>{a, b, c};
    };
    std::set<std::array<long long, 3>> classes;
    for (long long a = 1; 3 * a * a <= -D + 3; ++a)
        for (long long b = -2 * a; b <= 2 * a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c <= 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            classes.insert(reduce(a, b, c));
        }
    return static_cast<long long>(classes.size());
}

} // namespace

TEST_CASE("class numbers agree with the reduction oracle up to 200") {
    for (long long D = -3; D >= -200; --D) {
        long long mod = ((D % 4) + 4) % 4;
        if (mod != 0 && mod != 1) continue;
        INFO("D = ", D);
        CHECK(class_numbers(D).h == reduction_oracle(D));
    }
    CHECK_THROWS_AS(class_numbers(-5), InvalidDiscriminant);
    CHECK_THROWS_AS(class_numbers(5), InvalidDiscriminant);
}

TEST_CASE("pinned class numbers") {
    CHECK(class_numbers(-3).h == 1);
    CHECK(class_numbers(-3).unit_count == 6);
    CHECK(class_numbers(-3).h_reduced == Rational(1, 3));
    CHECK(class_numbers(-4).h == 1);
    CHECK(class_numbers(-4).unit_count == 4);
    CHECK(class_numbers(-48).h == 2);
    CHECK(class_numbers(-48).h_reduced == Rational(2));
    CHECK(class_numbers(-23).h == 3);
}

TEST_CASE("orbifold sets") {
    for (long long n : {1, 3, 5, 7, 9}) CHECK(orbifold_set_h2sq(n).count() == 0);
    OrbifoldSet s36 = orbifold_set_h2sq(6);
    CHECK(s36.count() == 24);
    for (const auto& t : s36.triples) {
        CHECK(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] == 36);
        CHECK(std::gcd(std::gcd(std::abs(t[0]), std::abs(t[1])),
                       std::gcd(std::abs(t[2]), 6LL)) == 2);
    }
    CHECK(e2_square_discriminant(6) == Rational(1));
    CHECK(e2_square_discriminant(5) == Rational(0));

    OrbifoldSet h3 = orbifold_set_h3(17);
    REQUIRE(h3.count() == 1);
    CHECK(h3.triples[0] == std::array<long long, 3>{-7, 0, -9});
    for (const auto& t : h3.triples)
        CHECK(2 * t[0] * t[0] - 3 * t[1] * t[1] - t[2] * t[2] == 17);
}

TEST_CASE("e3 case table") {
    for (long long d = 2; d <= 12; ++d) CHECK(e3_h11(d, 2, 0) == Rational(0));
    CHECK(e3_h11(4, 1, 0) == Rational(1)); // h(-48) = 2, units 2
    CHECK(e3_h11(4, 1, 1) == Rational(0));
    CHECK(e3_h11(5, 1, 0) == Rational(0)); // d = 2 mod 3 contributes only at n = 3
    CHECK(e3_h11(5, 3, 0) == class_numbers(-75).h_reduced / 2);
    CHECK(e3_h11(3, 3, 0) ==
          (Rational(3) * class_numbers(-3).h_reduced + class_numbers(-27).h_reduced) / 2);
    CHECK(e3_h11(3, 1, 0) == Rational(0));
    // d = 2: the small-discriminant case stays exact.
    CHECK(e3_h11(2, 3, 0) == class_numbers(-12).h_reduced / 2);
    // Doubled values are integers across the grid.
    for (long long d = 2; d <= 14; ++d)
        for (long long nn : {1, 3})
            for (int eps : {0, 1}) CHECK((e3_h11(d, nn, eps) * 2).denominator() == 1);
}

TEST_CASE("quadric solutions") {
    auto sols = quadric_solutions(diagonal_quadric({1, 1}, 5, 2));
    std::set<std::vector<long long>> got(sols.begin(), sols.end());
    CHECK(got == std::set<std::vector<long long>>{{1, 2}, {2, 1}});
    CHECK(quadric_solutions(diagonal_quadric({6, 1}, 10, 3)) ==
          std::vector<std::vector<long long>>{{1, 2}});
    CHECK(quadric_solutions(diagonal_quadric({1, 4}, 3, 2)).empty());

    // Exactness: every solution substitutes back.
    auto conic = three_cylinder_conic(1, 2, 1, 50, 7);
    for (const auto& s : quadric_solutions(conic)) {
        long long w1 = s[0], w3 = s[1];
        CHECK((1 + 2) * w1 * w1 + 2 * 2 * w1 * w3 + (2 + 1) * w3 * w3 == 50);
    }
    // Rank-c diagonal template.
    auto rank3 = quadric_solutions(diagonal_quadric({1, 1, 1}, 14, 3));
    for (const auto& s : rank3) CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] == 14);
    CHECK(rank3.size() == 6); // permutations of (1,2,3)
}

TEST_CASE("H(2) width census") {
    H2WidthCensus w1 = t_fixed_count_h2(5, 1);
    REQUIRE(w1.surfaces.size() == 2);
    CHECK(w1.surfaces[0] == H2Params{1, 1, 0, 2, 2, 0});
    CHECK(w1.surfaces[1] == H2Params{1, 1, 0, 2, 2, 1});

    H2WidthCensus w2 = t_fixed_count_h2(5, 2);
    REQUIRE(w2.surfaces.size() == 2);
    CHECK(w2.surfaces[0] == H2Params{1, 3, 0, 2, 1, 0});

    CHECK(t_fixed_count_h2(3, 1).count() == 1); // the one-cylinder exception
    CHECK(t_fixed_count_h2(4, 1).count() == 0);

    // Every reported surface really has the stated cusp width.
    for (int n : {6, 7, 8}) {
        for (int w = 1; w <= 2; ++w) {
            for (const H2Params& p : t_fixed_count_h2(n, w).surfaces) {
                CHECK(cusp_data(from_h2_params(p)).width == w);
            }
        }
    }
}

TEST_CASE("predicted orbit sizes") {
    CHECK(predicted_orbit_size(OrbitFamily::H2_A, {7, 0, 0}) == 54);
    CHECK(predicted_orbit_size(OrbitFamily::H2_B, {7, 0, 0}) == 36);
    CHECK(predicted_orbit_size(OrbitFamily::H2_A, {5, 0, 0}) == 18);
    CHECK(predicted_orbit_size(OrbitFamily::H2_B, {5, 0, 0}) == 9);
    CHECK(predicted_orbit_size(OrbitFamily::Zmiaikou_Alt, {7, 0, 0}) == 16);
    CHECK(predicted_orbit_size(OrbitFamily::Zmiaikou_Sym, {7, 0, 0}) == 144);
    CHECK(predicted_orbit_size(OrbitFamily::Duryev, {3, 2, 0}) == 4);
    CHECK(sl2_order_mod(2) == 6);
    CHECK(sl2_order_mod(3) == 24);
    CHECK(psl2_order_mod(2) == 6);
    CHECK(psl2_order_mod(7) == 168);
    CHECK_THROWS_AS(predicted_orbit_size(OrbitFamily::H2_A, {6, 0, 0}), BadParams);
}

TEST_CASE("conductors") {
    CHECK(discriminant_conductor(17) == 1);
    CHECK(discriminant_conductor(-12) == 2); // -12 = 2^2 * (-3)
    CHECK(discriminant_conductor(-27) == 3); // -27 = 3^2 * (-3)
    CHECK(discriminant_conductor(8) == 1);
    CHECK(discriminant_conductor(-48) == 4); // -48 = 4^2 * (-3)
}
