#include "origami/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace origami {

using arith::Rational;
using sl2z::Letter;

std::vector<int> fixed_members(const Orbit& orbit, const sl2z::SL2Word& word) {
    std::vector<int> out;
    for (int i = 0; i < orbit.size(); ++i) {
        Origami img = sl2z::apply_word(word, orbit.members[i].form);
        if (canonical_form(img).form == orbit.members[i].form) out.push_back(i);
    }
    return out;
}

std::vector<WordFixCount> word_census(const Orbit& orbit, int max_len, sl2z::Alphabet alphabet) {
    std::vector<WordFixCount> out;
    for (const sl2z::ReducedWord& rw : sl2z::reduced_words(max_len, alphabet)) {
        WordFixCount wf;
        wf.word = rw.word;
        wf.info = rw.info;
        wf.fixed_members = fixed_members(orbit, rw.word);
        out.push_back(std::move(wf));
    }
    return out;
}

namespace {

// Permutation of member indices induced by a generator letter.
std::vector<int> member_action(const Orbit& orbit, Letter g) {
    std::vector<int> img(orbit.size());
    for (int i = 0; i < orbit.size(); ++i) {
        Origami y = sl2z::apply_letter(g, orbit.members[i].form);
        int j = orbit.index_of_canonical(canonical_form(y).form);
        if (j < 0) throw Error("member_action: image left the orbit");
        img[i] = j;
    }
    return img;
}

} // namespace

std::vector<CuspInfo> cusp_census(const Orbit& orbit) {
    std::vector<int> t = member_action(orbit, Letter::T);
    std::vector<char> seen(orbit.size(), 0);
    std::vector<CuspInfo> cusps;
    for (int i = 0; i < orbit.size(); ++i) {
        if (seen[i]) continue;
        CuspInfo c;
        int j = i;
        do {
            seen[j] = 1;
            c.members.push_back(j);
            j = t[j];
        } while (j != i);
        c.width = static_cast<int>(c.members.size());
        CuspData cd = cusp_data(orbit.members[i].form);
        if (cd.width != c.width)
            throw Error("cusp_census: direct width disagrees with the T-cycle length");
        c.representative = cd.representative;
        c.normalized = h2_params_of(c.representative.form);
        cusps.push_back(std::move(c));
    }
    std::sort(cusps.begin(), cusps.end(), [](const CuspInfo& a, const CuspInfo& b) {
        if (a.width != b.width) return a.width < b.width;
        return a.representative.form < b.representative.form;
    });
    return cusps;
}

std::vector<long long> cycle_census(const OrbitGraph& graph, int max_len) {
    if (max_len < 1) throw BadParams("cycle_census: max_len must be >= 1");
    // Incidence lists: (edge id, far endpoint).
    std::vector<std::vector<std::pair<int, int>>> inc(graph.vertices);
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        const auto& ed = graph.edges[e];
        if (ed.loop) {
            inc[ed.u].emplace_back(static_cast<int>(e), ed.u);
        } else {
            inc[ed.u].emplace_back(static_cast<int>(e), ed.v);
            inc[ed.v].emplace_back(static_cast<int>(e), ed.u);
        }
    }
    std::set<std::vector<int>> classes;
    std::vector<int> walk;
    std::vector<char> used(graph.edges.size(), 0);

    auto canonical_cycle = [](const std::vector<int>& w) {
        std::vector<int> best = w;
        std::vector<int> cur = w;
        for (int dir = 0; dir < 2; ++dir) {
            for (size_t r = 0; r < cur.size(); ++r) {
                std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                if (cur < best) best = cur;
            }
            std::reverse(cur.begin(), cur.end());
        }
        return best;
    };

    std::function<void(int, int)> extend = [&](int at, int start) {
        for (const auto& [eid, far] : inc[at]) {
            if (used[eid]) continue;
            used[eid] = 1;
            walk.push_back(eid);
            if (far == start) classes.insert(canonical_cycle(walk));
            if (static_cast<int>(walk.size()) < max_len) extend(far, start);
            walk.pop_back();
            used[eid] = 0;
        }
    };
    for (int v = 0; v < graph.vertices; ++v) extend(v, v);

    std::vector<long long> counts(max_len, 0);
    for (const auto& c : classes) ++counts[c.size() - 1];
    return counts;
}

long long genus_lower_bound(long long V, const std::vector<long long>& counts, int girth_target) {
    if (girth_target < 2) throw BadParams("genus_lower_bound: girth target too small");
    if (static_cast<int>(counts.size()) < girth_target - 1)
        throw BadParams("genus_lower_bound: need counts for lengths below the girth target");
    long long weighted = 0;
    for (int i = 1; i < girth_target; ++i) weighted += (girth_target - i) * counts[i - 1];
    Rational bound = Rational(1) + Rational(V - weighted, 2 * girth_target);
    if (bound < Rational(1)) return 0;
    long long whole = bound.numerator() / bound.denominator();
    return whole * bound.denominator() == bound.numerator() ? whole : whole + 1;
}

CurveInvariants curve_invariants(const Orbit& orbit) {
    if (orbit.members.empty()) throw BadParams("curve_invariants: empty orbit");
    // -I is central, so symmetry of one member decides the whole orbit.
    if (!has_minus_one(orbit.members.front().form))
        throw NotMinusISymmetric("curve_invariants: -I is not in the Veech group of this orbit");

    std::vector<int> r = member_action(orbit, Letter::R);
    std::vector<int> u = member_action(orbit, Letter::U);
    std::vector<int> t = member_action(orbit, Letter::T);

    auto cycle_lengths = [](const std::vector<int>& p) {
        std::vector<int> lens;
        std::vector<char> seen(p.size(), 0);
        for (size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = 1;
                ++len;
                j = p[j];
            }
            lens.push_back(len);
        }
        return lens;
    };

    CurveInvariants ci;
    ci.V = orbit.size();
    for (int len : cycle_lengths(r)) {
        if (len == 1)
            ++ci.e2;
        else if (len != 2)
            throw Error("curve_invariants: R-cycle of length " + std::to_string(len) +
                        " contradicts R^2 = -I");
    }
    for (int len : cycle_lengths(u)) {
        if (len == 1)
            ++ci.e3;
        else if (len != 3)
            throw Error("curve_invariants: U-cycle of length " + std::to_string(len) +
                        " contradicts U^3 = -I");
    }
    ci.cusps = static_cast<long long>(cycle_lengths(t).size());
    ci.chi = Rational(-ci.V, 6);
    Rational genus = Rational(ci.V, 12) - Rational(ci.e2, 4) - Rational(ci.e3, 3) -
                     Rational(ci.cusps, 2) + Rational(1);
    if (genus.denominator() != 1 || genus.numerator() < 0)
        throw NonIntegralGenus("curve_invariants: genus formula gives " +
                               arith::rational_to_string(genus));
    ci.genus = genus.numerator();
    return ci;
}

std::vector<long long> elliptic_face_inventory(const CurveInvariants& ci,
                                               const std::vector<CuspInfo>& cusps) {
    std::vector<long long> c(12, 0);
    c[0] = ci.e2 + ci.e3;                 // R- and U-loops
    c[1] = (ci.V - ci.e2) / 2;            // R^2 bigons
    c[2] = (ci.V - ci.e3) / 3;            // U^3 triangles
    for (const CuspInfo& cusp : cusps) {
        long long face_len = 2LL * cusp.width; // (RU)^w faces, RU = T^-1
        if (face_len >= 2 && face_len <= 12) ++c[face_len - 1];
    }
    return c;
}

} // namespace origami
