#include "origami/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace origami {
namespace arith {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

long long isqrt_floor(long long v) {
    if (v < 0) throw BadParams("isqrt_floor: negative argument");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_perfect_square(long long v) {
    if (v < 0) return false;
    long long r = isqrt_floor(v);
    return r * r == v;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Rational euler_like_product(long long n) {
    Rational prod(1);
    for (long long p : prime_divisors(n)) prod *= Rational(p * p - 1, p * p);
    return prod;
}

// ---------------------------------------------------------------------------
// Quadrics

QuadricInstance diagonal_quadric(const std::vector<long long>& xs, long long target,
                                 long long bound) {
    const int k = static_cast<int>(xs.size());
    QuadricInstance q;
    q.coeff.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) q.coeff[i][i] = xs[i];
    q.target = target;
    q.lower.assign(k, 1);
    q.upper.assign(k, bound);
    return q;
}

QuadricInstance three_cylinder_conic(long long x, long long y, long long z, long long target,
                                     long long bound) {
    QuadricInstance q;
    q.coeff.assign(2, std::vector<long long>(2, 0));
    q.coeff[0][0] = x + y;
    q.coeff[0][1] = 2 * y;
    q.coeff[1][1] = y + z;
    q.target = target;
    q.lower.assign(2, 1);
    q.upper.assign(2, bound);
    return q;
}

namespace {

void quadric_search(const QuadricInstance& q, std::vector<long long>& w, int depth,
                    std::vector<std::vector<long long>>& out, bool nonneg) {
    const int k = q.variables();
    if (depth == k) {
        long long val = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) val += q.coeff[i][j] * w[i] * w[j];
        if (val == q.target) out.push_back(w);
        return;
    }
    for (long long v = q.lower[depth]; v <= q.upper[depth]; ++v) {
        w[depth] = v;
        if (nonneg) {
            // With non-negative coefficients the diagonal part already bounds
            // the value from below.
            long long lo = 0;
            for (int i = 0; i <= depth; ++i) lo += q.coeff[i][i] * w[i] * w[i];
            if (lo > q.target) break;
        }
        quadric_search(q, w, depth + 1, out, nonneg);
    }
}

} // namespace

std::vector<std::vector<long long>> quadric_solutions(const QuadricInstance& q) {
    const int k = q.variables();
    if (k == 0 || static_cast<int>(q.coeff.size()) != k)
        throw BadParams("quadric_solutions: malformed instance");
    for (int i = 0; i < k; ++i)
        if (q.upper[i] < q.lower[i])
            throw BadParams("quadric_solutions: empty bound range");
    bool nonneg = true;
    for (int i = 0; i < k && nonneg; ++i)
        for (int j = i; j < k && nonneg; ++j) nonneg = q.coeff[i][j] >= 0;
    std::vector<std::vector<long long>> out;
    std::vector<long long> w(k, 0);
    quadric_search(q, w, 0, out, nonneg);
    return out;
}

// ---------------------------------------------------------------------------
// H(2) width census

Origami h2_n3_one_cylinder() {
    return make_origami(parse_cycles("(1,2,3)", 3), parse_cycles("(2,3)", 3));
}

H2WidthCensus t_fixed_count_h2(int n, int width) {
    if (n < 3) throw BadParams("t_fixed_count_h2: n must be at least 3");
    if (width < 1 || width > 4) throw BadParams("t_fixed_count_h2: width must be in {1,2,3,4}");

    H2WidthCensus census;
    census.n = n;
    census.width = width;

    // Cusp width lcm(w1/gcd(w1,h1), w2/gcd(w2,h2)) = W: write w_i = d_i m_i,
    // h_i = x_i m_i with gcd(x_i, d_i) = 1 and lcm(d1, d2) = W. The widths
    // then solve the ellipse (x1 d1) m1^2 + (x2 d2) m2^2 = n.
    std::vector<long long> divisors;
    for (long long d = 1; d <= width; ++d)
        if (width % d == 0) divisors.push_back(d);

    std::vector<H2Params> surfaces;
    for (long long d1 : divisors) {
        for (long long d2 : divisors) {
            if (std::lcm(d1, d2) != width) continue;
            for (long long x1 = 1; x1 * d1 <= n; ++x1) {
                if (std::gcd(x1, d1) != 1) continue;
                for (long long x2 = 1; x1 * d1 + x2 * d2 <= n; ++x2) {
                    if (std::gcd(x2, d2) != 1) continue;
                    QuadricInstance ellipse =
                        diagonal_quadric({x1 * d1, x2 * d2}, n, isqrt_floor(n));
                    for (const auto& sol : quadric_solutions(ellipse)) {
                        long long m1 = sol[0], m2 = sol[1];
                        long long w1 = d1 * m1, w2 = d2 * m2;
                        if (w1 >= w2) continue; // ordered pairs only
                        long long h1 = x1 * m1, h2 = x2 * m2;
                        for (int t1 = 0; t1 < w1; ++t1)
                            for (int t2 = 0; t2 < w2; ++t2) {
                                H2Params p{static_cast<int>(w1), static_cast<int>(h1), t1,
                                           static_cast<int>(w2), static_cast<int>(h2), t2};
                                // Torus covers solve the same ellipses; only
                                // primitive surfaces enter the orbit censuses.
                                Origami x = from_h2_params(p);
                                if (!generators_primitive({x.h, x.v})) continue;
                                surfaces.push_back(p);
                            }
                    }
                }
            }
        }
    }
    std::sort(surfaces.begin(), surfaces.end());
    surfaces.erase(std::unique(surfaces.begin(), surfaces.end()), surfaces.end());
    census.surfaces = std::move(surfaces);
    if (n == 3 && width == 1) census.one_cylinder_special = true;
    return census;
}

// ---------------------------------------------------------------------------
// Class numbers

ClassNumberResult class_numbers(long long D) {
    if (D >= 0) throw InvalidDiscriminant("class_numbers: D must be negative");
    long long mod = ((D % 4) + 4) % 4;
    if (mod != 0 && mod != 1)
        throw InvalidDiscriminant("class_numbers: D must be 0 or 1 mod 4, got " +
                                  std::to_string(D));
    ClassNumberResult res;
    res.D = D;
    // Reduced forms (a, b, c): b^2 - 4ac = D, |b| <= a <= c, and b >= 0 when
    // |b| = a or a = c; primitive means gcd(a, b, c) = 1.
    long long h = 0;
    for (long long a = 1; 3 * a * a <= -D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    }
    res.h = h;
    res.unit_count = (D == -3) ? 6 : (D == -4) ? 4 : 2;
    res.h_reduced = Rational(2 * h, res.unit_count);
    return res;
}

long long discriminant_conductor(long long D) {
    if (D == 0) throw InvalidDiscriminant("discriminant_conductor: D = 0");
    long long mod = ((D % 4) + 4) % 4;
    if (mod != 0 && mod != 1)
        throw InvalidDiscriminant("discriminant_conductor: not a discriminant: " +
                                  std::to_string(D));
    long long best = 1;
    long long abs_d = std::abs(D);
    for (long long f = 1; f * f <= abs_d; ++f) {
        if (D % (f * f) != 0) continue;
        long long d0 = D / (f * f);
        long long m0 = ((d0 % 4) + 4) % 4;
        if (m0 != 0 && m0 != 1) continue;
        // d0 fundamental: either d0 = 1 mod 4 squarefree, or d0 = 4k with k
        // squarefree and k = 2 or 3 mod 4.
        auto squarefree = [](long long v) {
            v = std::abs(v);
            for (long long p = 2; p * p <= v; ++p)
                if (v % (p * p) == 0) return false;
            return true;
        };
        bool fundamental = false;
        if (m0 == 1 && squarefree(d0)) fundamental = true;
        if (m0 == 0) {
            long long k = d0 / 4;
            long long km = ((k % 4) + 4) % 4;
            if (squarefree(k) && (km == 2 || km == 3)) fundamental = true;
        }
        if (fundamental) best = std::max(best, f);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Orbifold sets

OrbifoldSet orbifold_set_h3(long long D) {
    if (D <= 0) throw BadParams("orbifold_set_h3: D must be positive");
    OrbifoldSet set;
    set.D = D;
    set.kind = OrbifoldKind::H3;
    const long long f =
        is_perfect_square(D) ? isqrt_floor(D) : discriminant_conductor(D);
    // -3 sqrt(D) < a < -sqrt(D)  <=>  a < 0 and D < a^2 < 9D.
    for (long long a = -3 * isqrt_floor(D) - 3; a < 0; ++a) {
        if (a * a <= D || a * a >= 9 * D) continue;
        for (long long b = 0; 3 * b * b <= 2 * a * a - D; --b) {
            long long rhs = 2 * a * a - 3 * b * b - D;
            if (rhs < 0) break;
            if (!is_perfect_square(rhs)) continue;
            long long c = -isqrt_floor(rhs);
            if (!(c < b)) continue;
            long long side = 4 * a - 3 * b - 3 * c;
            if (!(side < 0 || (side == 0 && c < 3 * b))) continue;
            if (std::gcd(std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)), f) != 1)
                continue;
            set.triples.push_back({a, b, c});
        }
    }
    std::sort(set.triples.begin(), set.triples.end());
    return set;
}

OrbifoldSet orbifold_set_h2sq(long long n) {
    if (n <= 0) throw BadParams("orbifold_set_h2sq: n must be positive");
    OrbifoldSet set;
    set.D = n * n;
    set.kind = OrbifoldKind::H2sq;
    for (long long a = -n; a <= n; ++a) {
        for (long long b = -n; b <= n; ++b) {
            long long rest = n * n - a * a - b * b;
            if (rest < 0 || !is_perfect_square(rest)) continue;
            long long c0 = isqrt_floor(rest);
            for (long long c : c0 == 0 ? std::vector<long long>{0}
                                       : std::vector<long long>{-c0, c0}) {
                long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)),
                                       std::gcd(std::abs(c), n));
                g = std::gcd(g, n);
                if (g == 2) set.triples.push_back({a, b, c});
            }
        }
    }
    std::sort(set.triples.begin(), set.triples.end());
    return set;
}

Rational e2_square_discriminant(long long n) {
    if (n % 2 != 0) return Rational(0);
    OrbifoldSet set = orbifold_set_h2sq(n);
    return Rational(set.count(), 24);
}

Rational e3_h11(long long d, long long n, int epsilon) {
    if (d < 2) throw BadParams("e3_h11: d must be at least 2");
    if (n < 1) throw BadParams("e3_h11: n must be positive");
    if (epsilon != 0 && epsilon != 1) throw BadParams("e3_h11: epsilon must be 0 or 1");
    if (n % 2 == 0) return Rational(0);
    auto h_red = [](long long D) { return class_numbers(D).h_reduced; };
    switch (d % 3) {
        case 0:
            if (n == 3 && epsilon == 0)
                return (Rational(3) * h_red(-(d * d) / 3) + h_red(-3 * d * d)) / 2;
            return Rational(0);
        case 1:
            if (n == 1 && epsilon == 0) return h_red(-3 * d * d) / 2;
            return Rational(0);
        default:
            if (n == 3 && epsilon == 0) return h_red(-3 * d * d) / 2;
            return Rational(0);
    }
}

// ---------------------------------------------------------------------------
// Predicted orbit sizes

long long sl2_order_mod(long long m) {
    if (m < 1) throw BadParams("sl2_order_mod: m must be positive");
    if (m == 1) return 1;
    Rational r(m * m * m);
    r *= euler_like_product(m);
    if (r.denominator() != 1) throw NonIntegral("sl2_order_mod: non-integer order");
    return r.numerator();
}

long long psl2_order_mod(long long m) {
    if (m <= 2) return sl2_order_mod(m);
    return sl2_order_mod(m) / 2;
}

namespace {

long long to_integer(const Rational& r, const char* what) {
    if (r.denominator() != 1)
        throw NonIntegral(std::string(what) + " evaluates to " + rational_to_string(r));
    return r.numerator();
}

} // namespace

long long predicted_orbit_size(OrbitFamily family, const OrbitSizeParams& p) {
    switch (family) {
        case OrbitFamily::H2_A: {
            if (p.n < 3 || p.n % 2 == 0)
                throw BadParams("predicted_orbit_size: H2_A needs odd n >= 3");
            Rational r = Rational(3, 16) * Rational(p.n - 1) * Rational(p.n * p.n) *
                         euler_like_product(p.n);
            return to_integer(r, "H2_A size");
        }
        case OrbitFamily::H2_B: {
            if (p.n < 5 || p.n % 2 == 0)
                throw BadParams("predicted_orbit_size: H2_B needs odd n >= 5");
            Rational r = Rational(3, 16) * Rational(p.n - 3) * Rational(p.n * p.n) *
                         euler_like_product(p.n);
            return to_integer(r, "H2_B size");
        }
        case OrbitFamily::Zmiaikou_Alt: {
            if (p.n < 7) throw BadParams("predicted_orbit_size: Zmiaikou needs n >= 7");
            Rational r = p.n % 2 == 1 ? Rational(p.n * p.n, 24) * Rational(p.n - 3) *
                                            Rational(p.n - 5) * euler_like_product(p.n)
                                      : Rational(p.n * p.n * p.n, 24) * Rational(p.n - 2) *
                                            euler_like_product(p.n);
            return to_integer(r, "Zmiaikou Alt size");
        }
        case OrbitFamily::Zmiaikou_Sym: {
            if (p.n < 7) throw BadParams("predicted_orbit_size: Zmiaikou needs n >= 7");
            Rational r = p.n % 2 == 1 ? Rational(p.n * p.n, 8) * Rational(p.n - 1) *
                                            Rational(p.n - 3) * euler_like_product(p.n)
                                      : Rational(p.n * p.n, 8) * Rational(p.n - 2) *
                                            Rational(p.n - 4) * euler_like_product(p.n);
            return to_integer(r, "Zmiaikou Sym size");
        }
        case OrbitFamily::Duryev: {
            if (p.d < 2 || p.n < 1 || p.n % 2 == 0)
                throw BadParams("predicted_orbit_size: Duryev needs d >= 2 and odd n");
            long long denom = (p.epsilon == 0) ? 12 : 4;
            Rational r = Rational(p.d - 1, denom * p.n) * Rational(psl2_order_mod(p.d)) *
                         Rational(sl2_order_mod(p.n));
            return to_integer(r, "Duryev size");
        }
    }
    throw BadParams("predicted_orbit_size: unknown family");
}

} // namespace arith
} // namespace origami
