#include "origami/orbit.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace origami {

using sl2z::Letter;

std::array<Letter, 2> generator_letters(GeneratorSet g) {
    if (g == GeneratorSet::Parabolic) return {Letter::T, Letter::S};
    return {Letter::R, Letter::U};
}

int Orbit::index_of(const Origami& x) const { return index_of_canonical(canonical_form(x).form); }

int Orbit::index_of_canonical(const Origami& c) const {
    auto it = std::lower_bound(members.begin(), members.end(), c,
                               [](const CanonicalOrigami& m, const Origami& v) {
                                   return m.form < v;
                               });
    if (it == members.end() || !(it->form == c)) return -1;
    return static_cast<int>(it - members.begin());
}

namespace {

std::vector<Origami> expand_chunk(const std::vector<const Origami*>& chunk,
                                  const std::array<Letter, 2>& gens) {
    std::vector<Origami> out;
    out.reserve(chunk.size() * 4);
    for (const Origami* x : chunk) {
        for (Letter g : gens) {
            out.push_back(canonical_form(sl2z::apply_letter(g, *x)).form);
            out.push_back(canonical_form(sl2z::apply_letter(sl2z::letter_inverse(g), *x)).form);
        }
    }
    return out;
}

} // namespace

Orbit enumerate_orbit(const Origami& seed, GeneratorSet generators, int workers) {
    if (workers < 1) workers = 1;
    if (!generators_primitive({seed.h, seed.v}))
        throw BadParams("enumerate_orbit: seed origami is not primitive");
    Orbit orbit;
    orbit.generators = generators;
    orbit.stratum = stratum_and_genus(seed);
    const auto gens = generator_letters(generators);

    std::set<Origami> members;
    std::vector<Origami> frontier{canonical_form(seed).form};
    members.insert(frontier.front());

    while (!frontier.empty()) {
        std::vector<Origami> images;
        if (workers == 1 || frontier.size() < 32) {
            std::vector<const Origami*> chunk;
            chunk.reserve(frontier.size());
            for (const Origami& x : frontier) chunk.push_back(&x);
            images = expand_chunk(chunk, gens);
        } else {
            std::vector<std::vector<const Origami*>> chunks(workers);
            for (size_t i = 0; i < frontier.size(); ++i)
                chunks[i % workers].push_back(&frontier[i]);
            std::vector<std::future<std::vector<Origami>>> futs;
            for (auto& ch : chunks)
                futs.push_back(std::async(std::launch::async, expand_chunk, std::cref(ch),
                                          std::cref(gens)));
            for (auto& f : futs) {
                auto part = f.get();
                images.insert(images.end(), part.begin(), part.end());
            }
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        std::vector<Origami> next;
        for (Origami& img : images)
            if (members.insert(img).second) next.push_back(std::move(img));
        frontier = std::move(next);
    }

    orbit.members.reserve(members.size());
    for (const Origami& m : members) orbit.members.push_back(CanonicalOrigami{m, origami_digest(m)});

    orbit.edges.assign(orbit.members.size(), {0, 0});
    for (size_t i = 0; i < orbit.members.size(); ++i) {
        for (int k = 0; k < 2; ++k) {
            Origami img = canonical_form(sl2z::apply_letter(gens[k], orbit.members[i].form)).form;
            int j = orbit.index_of_canonical(img);
            if (j < 0) throw Error("enumerate_orbit: generator image escaped the member set");
            orbit.edges[i][k] = j;
        }
    }
    return orbit;
}

std::string classify_orbit_label(const Orbit& orbit) {
    if (orbit.members.empty()) return "";
    const Origami& rep = orbit.members.front().form;
    if (orbit.stratum.zero_orders == std::vector<int>{2}) {
        auto all = hlk_invariants_all(rep);
        if (!all.empty()) {
            const HLKInvariant& inv = all.front().second;
            std::array<int, 3> tri = inv.unordered_triple;
            if (inv.l0 == 0 && tri == std::array<int, 3>{1, 1, 3}) return "A";
            if (inv.l0 == 2 && tri == std::array<int, 3>{1, 1, 1}) return "B";
            if (inv.l0 == 1 && tri == std::array<int, 3>{0, 2, 2}) return "single";
        }
        return "";
    }
    MonodromyClass m = monodromy_class(rep);
    if (m.kind == MonodromyKind::Alt) return "Alt";
    if (m.kind == MonodromyKind::Sym) return "Sym";
    return "";
}

int OrbitGraph::loop_count() const {
    int c = 0;
    for (const Edge& e : edges)
        if (e.loop) ++c;
    return c;
}

bool OrbitGraph::four_regular() const {
    std::vector<int> deg(vertices, 0);
    for (const Edge& e : edges) {
        if (e.loop) {
            deg[e.u] += 2;
        } else {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    for (int d : deg)
        if (d != 4) return false;
    return true;
}

bool OrbitGraph::connected() const {
    if (vertices == 0) return false;
    std::vector<std::vector<int>> adj(vertices);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == vertices;
}

OrbitGraph build_graph(const Orbit& orbit) {
    if (orbit.members.empty()) throw BadParams("build_graph: empty orbit");
    OrbitGraph g;
    g.vertices = orbit.size();
    const auto gens = generator_letters(orbit.generators);
    for (int k = 0; k < 2; ++k) {
        for (int v = 0; v < g.vertices; ++v) {
            int u = orbit.edges[v][k];
            g.edges.push_back(OrbitGraph::Edge{v, u, gens[k], v == u});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Stratum enumeration

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Permutation cycle_type_rep(const std::vector<int>& parts, int n) {
    std::vector<int> im(n);
    int pos = 0;
    for (int len : parts) {
        for (int i = 0; i < len; ++i) im[pos + i] = pos + (i + 1) % len;
        pos += len;
    }
    return Permutation(std::move(im));
}

// Moved-point count that the corner permutation of a surface in this stratum
// must have.
int stratum_moved_points(const StratumSignature& s) {
    int m = 0;
    for (int k : s.zero_orders) m += k + 1;
    return m;
}

bool corner_matches_stratum(const std::vector<int>& h, const std::vector<int>& hinv,
                            const std::vector<int>& v, const StratumSignature& target,
                            int expected_moved, std::vector<int>& scratch) {
    const int n = static_cast<int>(h.size());
    // c(v[j]) = h[v[hinv[j]]]; count moved points with early exit.
    int moved = 0;
    for (int j = 0; j < n; ++j) {
        if (h[v[hinv[j]]] != v[j] && ++moved > expected_moved) return false;
    }
    if (moved != expected_moved) return false;
    // Exact cycle type of the moved part.
    std::vector<int>& c = scratch;
    c.resize(n);
    for (int j = 0; j < n; ++j) c[v[j]] = h[v[hinv[j]]];
    std::vector<int> lens;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i] || c[i] == i) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = c[j];
        }
        lens.push_back(len - 1);
    }
    std::sort(lens.begin(), lens.end());
    return lens == target.zero_orders;
}

bool images_transitive(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int q : {h[p], v[p]}) {
            if (!seen[q]) {
                seen[q] = 1;
                ++count;
                stack.push_back(q);
            }
        }
    }
    // h and v are bijections, so forward closure equals full closure on a
    // finite set.
    return count == n;
}

StratumCensus partition_into_orbits(std::vector<Origami> canonical_members,
                                    const StratumSignature& stratum, GeneratorSet gens,
                                    int workers) {
    std::sort(canonical_members.begin(), canonical_members.end());
    canonical_members.erase(std::unique(canonical_members.begin(), canonical_members.end()),
                            canonical_members.end());
    StratumCensus census;
    census.surfaces = static_cast<long long>(canonical_members.size());
    std::set<Origami> remaining(canonical_members.begin(), canonical_members.end());
    while (!remaining.empty()) {
        Origami seed = *remaining.begin();
        Orbit orbit = enumerate_orbit(seed, gens, workers);
        for (const CanonicalOrigami& m : orbit.members) {
            auto it = remaining.find(m.form);
            if (it == remaining.end())
                throw Error("stratum orbit escaped the enumerated surface set");
            remaining.erase(it);
        }
        orbit.label = classify_orbit_label(orbit);
        census.orbits.push_back(std::move(orbit));
    }
    std::sort(census.orbits.begin(), census.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members.front().form < b.members.front().form;
    });
    (void)stratum;
    return census;
}

} // namespace

StratumCensus enumerate_stratum_brute(int n, const StratumSignature& stratum,
                                      const BruteOptions& opts) {
    if (n < 1) throw BadParams("enumerate_stratum_brute: n must be positive");
    if (n > opts.cap)
        throw CapExceeded("enumerate_stratum_brute: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.cap));

    const int expected_moved = stratum_moved_points(stratum);
    std::vector<Origami> found;
    std::set<Origami> seen;
    std::vector<int> scratch;

    for (const auto& parts : partitions_of(n)) {
        Permutation h = cycle_type_rep(parts, n);
        Permutation hinv = h.inverse();
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        do {
            if (!corner_matches_stratum(h.images(), hinv.images(), v, stratum, expected_moved,
                                        scratch))
                continue;
            if (!images_transitive(h.images(), v)) continue;
            Origami x{h, Permutation(std::vector<int>(v))};
            Origami c = canonical_form(x).form;
            if (!seen.insert(c).second) continue;
            if (opts.primitive_only && !generators_primitive({c.h, c.v})) continue;
            found.push_back(std::move(c));
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return partition_into_orbits(std::move(found), stratum, GeneratorSet::Parabolic, 1);
}

StratumCensus enumerate_stratum_seeded(int n, const StratumSignature& stratum,
                                       const std::vector<Origami>& seeds, int workers) {
    std::vector<Orbit> orbits;
    for (const Origami& seed : seeds) {
        if (seed.squares() != n)
            throw BadParams("enumerate_stratum_seeded: seed has wrong square count");
        if (stratum_and_genus(seed) != stratum)
            throw BadParams("enumerate_stratum_seeded: seed lies outside the stratum");
        CanonicalOrigami c = canonical_form(seed);
        bool known = false;
        for (const Orbit& o : orbits)
            if (o.index_of_canonical(c.form) >= 0) {
                known = true;
                break;
            }
        if (known) continue;
        Orbit o = enumerate_orbit(seed, GeneratorSet::Parabolic, workers);
        o.label = classify_orbit_label(o);
        orbits.push_back(std::move(o));
    }
    StratumCensus census;
    census.orbits = std::move(orbits);
    for (const Orbit& o : census.orbits) census.surfaces += o.size();
    std::sort(census.orbits.begin(), census.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members.front().form < b.members.front().form;
    });
    return census;
}

std::vector<Origami> all_h2_origamis(int n) {
    std::vector<Origami> out;

    // Two-cylinder surfaces: the parameter builder covers the single diagram.
    for (int w1 = 1; w1 <= n; ++w1)
        for (int w2 = w1 + 1; w2 <= n; ++w2)
            for (int h1 = 1; w1 * h1 + w2 <= n; ++h1) {
                int rest = n - w1 * h1;
                if (rest % w2 != 0) continue;
                int h2 = rest / w2;
                if (h2 < 1) continue;
                for (int t1 = 0; t1 < w1; ++t1)
                    for (int t2 = 0; t2 < w2; ++t2)
                        out.push_back(from_h2_params(w1, h1, t1, w2, h2, t2));
            }

    // One-cylinder surfaces: one w x k cylinder whose top circle, cut into
    // three saddle connections, reglues to the bottom circle in any order and
    // rotation; wrong gluings are filtered by the computed stratum.
    const StratumSignature h2{std::vector<int>{2}, 2};
    for (int w = 3; w <= n; ++w) {
        if (n % w != 0) continue;
        int k = n / w;
        std::vector<int> perm3{0, 1, 2};
        for (int a = 1; a + 2 <= w; ++a)
            for (int b = 1; a + b + 1 <= w; ++b) {
                int c = w - a - b;
                const int len[3] = {a, b, c};
                const int top_start[3] = {0, a, a + b};
                std::vector<int> order{0, 1, 2};
                do {
                    for (int t = 0; t < w; ++t) {
                        std::vector<int> him(w * k), vim(w * k);
                        auto id = [&](int r, int x) { return r * w + x; };
                        for (int r = 0; r < k; ++r)
                            for (int x = 0; x < w; ++x) him[id(r, x)] = id(r, (x + 1) % w);
                        for (int r = 0; r + 1 < k; ++r)
                            for (int x = 0; x < w; ++x) vim[id(r, x)] = id(r + 1, x);
                        int bot_start[3];
                        int pos = t;
                        for (int j = 0; j < 3; ++j) {
                            bot_start[order[j]] = pos;
                            pos += len[order[j]];
                        }
                        for (int j = 0; j < 3; ++j)
                            for (int x = 0; x < len[j]; ++x)
                                vim[id(k - 1, top_start[j] + x)] =
                                    id(0, (bot_start[j] + x) % w);
                        Origami x{Permutation(std::move(him)), Permutation(std::move(vim))};
                        try {
                            if (stratum_and_genus(x) != h2) continue;
                        } catch (const ParityError&) {
                            continue;
                        }
                        out.push_back(std::move(x));
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            }
    }
    return out;
}

StratumCensus enumerate_h2_complete(int n, int workers) {
    std::vector<Origami> primitive;
    std::set<Origami> seen;
    for (const Origami& x : all_h2_origamis(n)) {
        Origami c = canonical_form(x).form;
        if (!seen.insert(c).second) continue;
        if (generators_primitive({c.h, c.v})) primitive.push_back(std::move(c));
    }
    const StratumSignature h2{std::vector<int>{2}, 2};
    return partition_into_orbits(std::move(primitive), h2, GeneratorSet::Parabolic, workers);
}

std::vector<Origami> scan_seeds(int n, const StratumSignature& stratum, int max_results) {
    std::vector<Origami> out;
    std::set<Origami> seen;

    std::vector<std::vector<int>> shapes;
    shapes.push_back({n});
    if (n >= 2) shapes.push_back({n - 1, 1});
    if (n >= 4) shapes.push_back({n - 2, 2});
    if (n >= 3) shapes.push_back({n - 2, 1, 1});
    if (n >= 6) shapes.push_back({n - 3, 3});
    if (n % 2 == 0 && n >= 4) shapes.push_back({n / 2, n / 2});
    if (n >= 5) shapes.push_back({n - 3, 2, 1});
    if (n >= 6 && n % 3 == 0) shapes.push_back({n / 3, n / 3, n / 3});

    // v ranges over permutations supported on a small window; two windows per
    // size, one anchored at the front, one including the last symbol.
    const int kmax = std::min(n, 6);
    for (const auto& shape : shapes) {
        Permutation h = cycle_type_rep(shape, n);
        for (int k = 2; k <= kmax; ++k) {
            for (int window = 0; window < 2; ++window) {
                std::vector<int> support;
                for (int i = 0; i + 1 < k; ++i) support.push_back(i);
                support.push_back(window == 0 ? k - 1 : n - 1);
                std::sort(support.begin(), support.end());
                support.erase(std::unique(support.begin(), support.end()), support.end());
                std::vector<int> sub(support.size());
                std::iota(sub.begin(), sub.end(), 0);
                do {
                    std::vector<int> vim(n);
                    std::iota(vim.begin(), vim.end(), 0);
                    for (size_t i = 0; i < support.size(); ++i)
                        vim[support[i]] = support[sub[i]];
                    if (!images_transitive(h.images(), vim)) continue;
                    Origami x{h, Permutation(std::move(vim))};
                    try {
                        if (stratum_and_genus(x) != stratum) continue;
                    } catch (const ParityError&) {
                        continue;
                    }
                    Origami c = canonical_form(x).form;
                    if (!seen.insert(c).second) continue;
                    if (!generators_primitive({c.h, c.v})) continue;
                    out.push_back(std::move(c));
                    if (static_cast<int>(out.size()) >= max_results) return out;
                } while (std::next_permutation(sub.begin(), sub.end()));
            }
        }
    }
    return out;
}

std::vector<Origami> scan_seeds_full(int n, const StratumSignature& stratum,
                                     const std::vector<std::vector<int>>& shapes,
                                     const std::function<bool(const Origami&)>& accept,
                                     int max_results) {
    const int expected_moved = stratum_moved_points(stratum);
    std::vector<Origami> out;
    std::set<Origami> seen;
    std::vector<int> scratch;
    for (const auto& shape : shapes) {
        int total = 0;
        for (int len : shape) total += len;
        if (total != n) throw BadParams("scan_seeds_full: shape does not sum to n");
        Permutation h = cycle_type_rep(shape, n);
        Permutation hinv = h.inverse();
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        do {
            if (!corner_matches_stratum(h.images(), hinv.images(), v, stratum, expected_moved,
                                        scratch))
                continue;
            if (!images_transitive(h.images(), v)) continue;
            Origami x{h, Permutation(std::vector<int>(v))};
            if (!accept(x)) continue;
            Origami c = canonical_form(x).form;
            if (!seen.insert(c).second) continue;
            if (!generators_primitive({c.h, c.v})) continue;
            out.push_back(std::move(c));
            if (static_cast<int>(out.size()) >= max_results) return out;
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Block systems

namespace {

// Three-block quotient dynamics: T swaps B1,B2 and fixes B3; S fixes B1 and
// swaps B2,B3. Block ids are 0-based.
bool check_three_block_dynamics(const Orbit& orbit, const std::vector<int>& block_of,
                                std::string& detail) {
    static const int t_map[3] = {1, 0, 2};
    static const int s_map[3] = {0, 2, 1};
    for (int i = 0; i < orbit.size(); ++i) {
        int b = block_of[i];
        if (b < 0) {
            detail = "member " + std::to_string(i) + " not classified";
            return false;
        }
        if (block_of[orbit.edges[i][0]] != t_map[b] || block_of[orbit.edges[i][1]] != s_map[b]) {
            detail = "generator dynamics violated at member " + std::to_string(i);
            return false;
        }
    }
    return true;
}

BlockSystemCheck check_prop_hlk_three_blocks(const Orbit& orbit,
                                             const std::vector<HLKInvariant>& invs) {
    BlockSystemCheck c{"hlk-three-blocks", false, false, ""};
    if (invs.empty()) return c;
    std::array<int, 3> tri = invs.front().unordered_triple; // ascending
    int distinct;
    if (tri[0] == tri[1] && tri[1] == tri[2]) {
        c.detail = "all HLK values equal; proposition does not apply";
        return c;
    } else if (tri[0] == tri[1]) {
        distinct = tri[2];
    } else if (tri[1] == tri[2]) {
        distinct = tri[0];
    } else {
        c.detail = "three distinct HLK values; the six-block system applies instead";
        return c;
    }
    c.applicable = true;
    std::vector<int> block_of(orbit.size(), -1);
    std::array<int, 3> sizes{0, 0, 0};
    for (int i = 0; i < orbit.size(); ++i) {
        int hits = 0, pos = -1;
        for (int k = 0; k < 3; ++k)
            if (invs[i].ordered_triple[k] == distinct) {
                ++hits;
                pos = k;
            }
        if (hits != 1) {
            c.detail = "member " + std::to_string(i) + " has no unique distinguished position";
            return c;
        }
        block_of[i] = pos;
        ++sizes[pos];
    }
    if (orbit.size() > 3 && (sizes[0] == 0 || sizes[1] == 0 || sizes[2] == 0)) {
        c.detail = "a block is empty";
        return c;
    }
    c.passed = check_three_block_dynamics(orbit, block_of, c.detail);
    return c;
}

BlockSystemCheck check_prop_parity_blocks(const Orbit& orbit) {
    BlockSystemCheck c{"parity-three-blocks", false, false, ""};
    MonodromyClass m = monodromy_class(orbit.members.front().form);
    if (m.kind != MonodromyKind::Sym) {
        c.detail = "monodromy group is not Sym(n)";
        return c;
    }
    c.applicable = true;
    std::vector<int> block_of(orbit.size(), -1);
    for (int i = 0; i < orbit.size(); ++i) {
        const Origami& x = orbit.members[i].form;
        bool h_alt = permutation_parity(x.h) == Parity::Even;
        bool v_alt = permutation_parity(x.v) == Parity::Even;
        if (h_alt && v_alt) {
            c.detail = "member with both permutations even contradicts Sym monodromy";
            return c;
        }
        block_of[i] = !h_alt && v_alt ? 0 : (!h_alt && !v_alt ? 1 : 2);
    }
    c.passed = check_three_block_dynamics(orbit, block_of, c.detail);
    return c;
}

BlockSystemCheck check_prop_minus_one_pairs(const Orbit& orbit) {
    BlockSystemCheck c{"minus-one-pairing", false, false, ""};
    if (has_minus_one(orbit.members.front().form)) {
        c.detail = "-I is a symmetry; proposition does not apply";
        return c;
    }
    c.applicable = true;
    std::vector<int> mate(orbit.size(), -1);
    for (int i = 0; i < orbit.size(); ++i) {
        int j = orbit.index_of(minus_one(orbit.members[i].form));
        if (j < 0) {
            c.detail = "-I image of member " + std::to_string(i) + " is outside the orbit";
            return c;
        }
        if (j == i) {
            c.detail = "member " + std::to_string(i) + " is -I symmetric";
            return c;
        }
        mate[i] = j;
    }
    for (int i = 0; i < orbit.size(); ++i) {
        if (mate[mate[i]] != i) {
            c.detail = "pairing is not an involution";
            return c;
        }
        for (int k = 0; k < 2; ++k) {
            if (mate[orbit.edges[i][k]] != orbit.edges[mate[i]][k]) {
                c.detail = "generator does not map pairs to pairs at member " + std::to_string(i);
                return c;
            }
        }
    }
    c.passed = true;
    c.detail = "perfect matching of " + std::to_string(orbit.size() / 2) + " pairs";
    return c;
}

BlockSystemCheck check_prop_six_blocks(const Orbit& orbit, const std::vector<HLKInvariant>& invs) {
    BlockSystemCheck c{"hlk-six-blocks", false, false, ""};
    if (invs.empty()) return c;
    std::array<int, 3> tri = invs.front().unordered_triple;
    if (tri[0] == tri[1] || tri[1] == tri[2]) {
        c.detail = "HLK values not pairwise distinct; proposition does not apply";
        return c;
    }
    c.applicable = true;
    // Name (l1,l2,l3) after the first member's ordered triple; B1..B6 are its
    // six permutations, ordered so that T and S act by fixed block swaps.
    const std::array<int, 3> base = invs.front().ordered_triple;
    const int l1 = base[0], l2 = base[1], l3 = base[2];
    const std::array<std::array<int, 3>, 6> blocks{{{l1, l2, l3},
                                                    {l2, l1, l3},
                                                    {l2, l3, l1},
                                                    {l3, l2, l1},
                                                    {l3, l1, l2},
                                                    {l1, l3, l2}}};
    std::vector<int> block_of(orbit.size(), -1);
    for (int i = 0; i < orbit.size(); ++i) {
        for (int b = 0; b < 6; ++b)
            if (invs[i].ordered_triple == blocks[b]) {
                block_of[i] = b;
                break;
            }
        if (block_of[i] < 0) {
            c.detail = "member " + std::to_string(i) + " matches no block";
            return c;
        }
    }
    // Block dynamics: T: 1<->2, 3<->4, 5<->6; S: 1<->6, 2<->3, 4<->5 (1-based).
    static const int t_map[6] = {1, 0, 3, 2, 5, 4};
    static const int s_map[6] = {5, 2, 1, 4, 3, 0};
    for (int i = 0; i < orbit.size(); ++i) {
        int b = block_of[i];
        if (block_of[orbit.edges[i][0]] != t_map[b] || block_of[orbit.edges[i][1]] != s_map[b]) {
            c.detail = "six-block dynamics violated at member " + std::to_string(i);
            return c;
        }
    }
    // Coarser systems: {B1+B6, B2+B5, B3+B4} with blocksys4 dynamics, and the
    // two-block system swapped by both generators.
    std::vector<int> coarse3(orbit.size()), coarse2(orbit.size());
    for (int i = 0; i < orbit.size(); ++i) {
        int b = block_of[i];
        coarse3[i] = (b == 0 || b == 5) ? 0 : (b == 1 || b == 4) ? 1 : 2;
        coarse2[i] = (b % 2 == 0) ? 0 : 1;
    }
    if (!check_three_block_dynamics(orbit, coarse3, c.detail)) return c;
    for (int i = 0; i < orbit.size(); ++i) {
        if (coarse2[orbit.edges[i][0]] != 1 - coarse2[i] ||
            coarse2[orbit.edges[i][1]] != 1 - coarse2[i]) {
            c.detail = "two-block dynamics violated at member " + std::to_string(i);
            return c;
        }
    }
    c.passed = true;
    return c;
}

BlockSystemCheck check_one_cylinder_corollary(const Orbit& orbit) {
    BlockSystemCheck c{"doubly-one-cylinder bound", false, false, ""};
    MonodromyClass m = monodromy_class(orbit.members.front().form);
    if (m.kind != MonodromyKind::Sym) {
        c.detail = "monodromy group is not Sym(n)";
        return c;
    }
    c.applicable = true;
    int one_cyl = 0, doubly = 0;
    for (const CanonicalOrigami& mem : orbit.members) {
        if (cylinder_decomposition(mem.form).cylinders.size() != 1) continue;
        ++one_cyl;
        if (vertical_cylinder_count(mem.form) == 1) ++doubly;
    }
    c.passed = 2 * doubly <= one_cyl;
    std::ostringstream os;
    os << doubly << " of " << one_cyl << " one-cylinder members are doubly one-cylinder";
    c.detail = os.str();
    return c;
}

} // namespace

BlockSystemReport check_block_systems(const Orbit& orbit) {
    if (orbit.generators != GeneratorSet::Parabolic)
        throw BadParams("check_block_systems: needs a parabolic-generator orbit");
    if (orbit.members.empty()) throw BadParams("check_block_systems: empty orbit");

    // Per-member ordered HLK triples, when -I is a symmetry of the orbit.
    std::vector<HLKInvariant> invs;
    if (has_minus_one(orbit.members.front().form)) {
        invs.reserve(orbit.members.size());
        for (const CanonicalOrigami& m : orbit.members)
            invs.push_back(hlk_invariant(m.form));
    }

    BlockSystemReport report;
    report.checks.push_back(check_prop_six_blocks(orbit, invs));
    report.checks.push_back(check_prop_hlk_three_blocks(orbit, invs));
    report.checks.push_back(check_prop_parity_blocks(orbit));
    report.checks.push_back(check_prop_minus_one_pairs(orbit));
    report.checks.push_back(check_one_cylinder_corollary(orbit));
    return report;
}

} // namespace origami
