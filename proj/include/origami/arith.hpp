#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "origami/origami.hpp"

namespace origami {
namespace arith {

using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r);

long long isqrt_floor(long long v);
bool is_perfect_square(long long v);

/// Distinct prime divisors, ascending.
std::vector<long long> prime_divisors(long long n);

/// prod over primes p | n of (1 - p^-2), exactly.
Rational euler_like_product(long long n);

// ---------------------------------------------------------------------------
// Lattice points on quadrics

/// Integer quadratic form sum_{i<=j} coeff[i][j] w_i w_j = target with
/// per-variable inclusive bounds. Half-integer templates must be cleared to
/// integers by the caller (double both sides).
struct QuadricInstance {
    std::vector<std::vector<long long>> coeff; // k x k, upper triangle used
    long long target = 0;
    std::vector<long long> lower, upper;

    int variables() const { return static_cast<int>(lower.size()); }
};

/// x1 w1^2 + ... + xc wc^2 = target, 1 <= w_i <= bound: the cusp equation for
/// c cylinders.
QuadricInstance diagonal_quadric(const std::vector<long long>& xs, long long target,
                                 long long bound);

/// (x+y) w1^2 + 2y w1 w3 + (y+z) w3^2 = target: the rank-two conic that the
/// three-cylinder cusp equation reduces to.
QuadricInstance three_cylinder_conic(long long x, long long y, long long z, long long target,
                                     long long bound);

/// Exhaustive positive-integer solutions within bounds, lexicographic order.
std::vector<std::vector<long long>> quadric_solutions(const QuadricInstance& q);

// ---------------------------------------------------------------------------
// Cusp ellipse census for H(2)

/// All primitive two-cylinder H(2) surfaces with n squares whose cusp has
/// width exactly `width`, found by sweeping the height multipliers and
/// enumerating ellipse lattice points; each solution carries w1*w2 twist
/// choices (imprimitive torus covers solve the same ellipses and are
/// dropped). For n = 3 and width 1, the unique one-cylinder origami with
/// cusp width 1 is reported separately.
struct H2WidthCensus {
    int n = 0;
    int width = 0;
    std::vector<H2Params> surfaces; // all two-cylinder members of width-`width` cusps
    bool one_cylinder_special = false;

    long long count() const {
        return static_cast<long long>(surfaces.size()) + (one_cylinder_special ? 1 : 0);
    }
};

H2WidthCensus t_fixed_count_h2(int n, int width);

/// The n = 3 one-cylinder origami of cusp width 1.
Origami h2_n3_one_cylinder();

// ---------------------------------------------------------------------------
// Class numbers

struct ClassNumberResult {
    long long D = 0;     // negative discriminant
    long long h = 0;     // class number
    int unit_count = 2;  // |O_D^x|
    Rational h_reduced;  // 2h / unit_count
};

/// Class number by exhaustive enumeration of reduced primitive forms
/// (|b| <= a <= c, b >= 0 when |b| = a or a = c, b^2 - 4ac = D).
ClassNumberResult class_numbers(long long D);

/// Conductor f of a (positive or negative) discriminant: largest f with
/// f^2 | D and D/f^2 a fundamental discriminant.
long long discriminant_conductor(long long D);

// ---------------------------------------------------------------------------
// Orbifold point sets

enum class OrbifoldKind { H3, H2sq };

struct OrbifoldSet {
    long long D = 0;
    OrbifoldKind kind = OrbifoldKind::H3;
    std::vector<std::array<long long, 3>> triples;

    long long count() const { return static_cast<long long>(triples.size()); }
};

/// H3(D) = {(a,b,c): 2a^2 - 3b^2 - c^2 = D, gcd(a,b,c,f) = 1,
/// -3 sqrt(D) < a < -sqrt(D), c < b <= 0, side condition}; f = sqrt(D) for
/// square D, the conductor otherwise.
OrbifoldSet orbifold_set_h3(long long D);

/// H2sq(n^2) = {(a,b,c): a^2+b^2+c^2 = n^2, gcd(a,b,c,n) = 2}.
OrbifoldSet orbifold_set_h2sq(long long n);

/// e2 for square discriminant n^2: |H2sq(n^2)|/24 for even n, 0 for odd n.
Rational e2_square_discriminant(long long n);

/// Order-three orbifold point count e3(W_{d^2}^epsilon[n]) by the case table
/// on (d mod 3, n, epsilon); 0 for even n.
Rational e3_h11(long long d, long long n, int epsilon);

// ---------------------------------------------------------------------------
// Predicted orbit sizes

enum class OrbitFamily { H2_A, H2_B, Zmiaikou_Alt, Zmiaikou_Sym, Duryev };

struct OrbitSizeParams {
    long long n = 0;
    long long d = 0;
    int epsilon = 0;
};

long long sl2_order_mod(long long m);  // |SL(2, Z/m)|
long long psl2_order_mod(long long m); // |PSL(2, Z/m)|

/// Exact evaluation of the closed-form orbit cardinalities; throws
/// NonIntegral when the formula does not produce an integer (misuse).
long long predicted_orbit_size(OrbitFamily family, const OrbitSizeParams& params);

} // namespace arith
} // namespace origami
