#include "origami/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace origami {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw BadParams("image table is not a bijection of {1.." + std::to_string(n) + "}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw BadParams("cycle symbol out of range for degree " + std::to_string(n));
            im[from] = to;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j + 1);
            j = images_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " vs " +
                             std::to_string(q.degree()));
    std::vector<int> im(p.degree());
    for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
    return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& q, const Permutation& p) {
    return compose(compose(q, p), q.inverse());
}

CycleData cycle_data(const Permutation& p) {
    CycleData d;
    std::vector<char> seen(p.degree(), 0);
    int ncycles = 0;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = p(j);
        }
        d.cycle_type.push_back(len);
        ++ncycles;
    }
    std::sort(d.cycle_type.begin(), d.cycle_type.end());
    d.parity = ((p.degree() - ncycles) % 2 == 0) ? Parity::Even : Parity::Odd;
    return d;
}

Parity permutation_parity(const Permutation& p) { return cycle_data(p).parity; }

std::string group_order_to_string(GroupOrder v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

// Deterministic stabilizer chain. gens_[i] holds the strong generators that
// fix base_[0..i-1]; base points are the smallest moved points as they are
// discovered, orbits grow in BFS ascending order, and Schreier generators are
// processed in a fixed order, so the chain is reproducible bit-for-bit.
class StabChain {
public:
    explicit StabChain(int degree) : n_(degree) {}

    void add_strong_generator(const Permutation& r) {
        size_t j = 0;
        while (j < base_.size() && r(base_[j]) == base_[j]) ++j;
        if (j == base_.size()) {
            int b = 0;
            while (r(b) == b) ++b;
            base_.push_back(b);
            gens_.emplace_back();
            orbit_.emplace_back();
            transversal_.emplace_back();
        }
        for (size_t k = 0; k <= j && k < base_.size(); ++k) gens_[k].push_back(r);
        for (size_t k = 0; k <= j && k < base_.size(); ++k) recompute_orbit(k);
    }

    // Sift g through levels >= from; true iff it reduces to the identity.
    bool strip(Permutation& g, size_t from) const {
        for (size_t i = from; i < base_.size(); ++i) {
            int img = g(base_[i]);
            auto it = transversal_[i].find(img);
            if (it == transversal_[i].end()) return false;
            if (img != base_[i]) g = compose(it->second.inverse(), g);
        }
        return g.is_identity();
    }

    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < base_.size() && !changed; ++i) {
                for (int p : orbit_[i]) {
                    const Permutation& up = transversal_[i].at(p);
                    for (const Permutation& g : gens_[i]) {
                        const Permutation& ug = transversal_[i].at(g(p));
                        Permutation schreier = compose(ug.inverse(), compose(g, up));
                        if (schreier.is_identity()) continue;
                        Permutation residue = schreier;
                        if (!strip(residue, i + 1)) {
                            add_strong_generator(residue);
                            changed = true;
                            break;
                        }
                    }
                    if (changed) break;
                }
            }
        }
    }

    GroupOrder order() const {
        GroupOrder o = 1;
        for (const auto& orb : orbit_) o *= orb.size();
        return o;
    }

private:
    void recompute_orbit(size_t i) {
        orbit_[i].clear();
        transversal_[i].clear();
        transversal_[i].emplace(base_[i], Permutation::identity(n_));
        orbit_[i].push_back(base_[i]);
        std::vector<int> frontier{base_[i]};
        while (!frontier.empty()) {
            std::sort(frontier.begin(), frontier.end());
            std::vector<int> next;
            for (int p : frontier) {
                for (const Permutation& g : gens_[i]) {
                    int q = g(p);
                    if (!transversal_[i].count(q)) {
                        transversal_[i].emplace(q, compose(g, transversal_[i].at(p)));
                        orbit_[i].push_back(q);
                        next.push_back(q);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(orbit_[i].begin(), orbit_[i].end());
    }

    int n_;
    std::vector<int> base_;
    std::vector<std::vector<Permutation>> gens_;
    std::vector<std::vector<int>> orbit_;
    std::vector<std::map<int, Permutation>> transversal_;
};

bool orbit_transitive(const std::vector<Permutation>& gens, int n) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const Permutation& g : gens) {
            for (int q : {g(p), g.inverse()(p)}) {
                if (!seen[q]) {
                    seen[q] = 1;
                    ++count;
                    stack.push_back(q);
                }
            }
        }
    }
    return count == n;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

// Smallest block system whose classes contain {0, k}: union-find refinement,
// propagating merged pairs through every generator.
std::vector<int> minimal_block_classes(const std::vector<Permutation>& gens, int n, int k) {
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    uf.unite(0, k);
    work.emplace_back(0, k);
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (const Permutation& g : gens) {
            int ga = g(a), gb = g(b);
            if (uf.unite(ga, gb)) work.emplace_back(ga, gb);
        }
    }
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = uf.find(i);
    return cls;
}

} // namespace

GroupDescription group_describe(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw BadParams("group_describe: empty generator list");
    const int n = gens.front().degree();
    for (const Permutation& g : gens)
        if (g.degree() != n) throw DegreeMismatch("group_describe: mixed degrees");

    GroupDescription d;
    d.generators = gens;

    StabChain chain(n);
    for (const Permutation& g : gens)
        if (!g.is_identity()) chain.add_strong_generator(g);
    chain.close();
    d.order = chain.order();

    d.transitive = orbit_transitive(gens, n);
    d.primitive = false;
    if (d.transitive && n >= 1) {
        d.primitive = true;
        for (int k = 1; k < n; ++k) {
            std::vector<int> cls = minimal_block_classes(gens, n, k);
            int block0 = 0;
            for (int i = 0; i < n; ++i)
                if (cls[i] == cls[0]) ++block0;
            if (block0 < n) {
                d.primitive = false;
                std::map<int, std::vector<int>> blocks;
                for (int i = 0; i < n; ++i) blocks[cls[i]].push_back(i + 1);
                std::vector<std::vector<int>> out;
                for (auto& [rep, blk] : blocks) out.push_back(std::move(blk));
                std::sort(out.begin(), out.end());
                d.minimal_blocks = std::move(out);
                break;
            }
        }
    }
    return d;
}

bool generators_primitive(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw BadParams("generators_primitive: empty generator list");
    const int n = gens.front().degree();
    if (!orbit_transitive(gens, n)) return false;
    for (int k = 1; k < n; ++k) {
        std::vector<int> cls = minimal_block_classes(gens, n, k);
        int block0 = 0;
        for (int i = 0; i < n; ++i)
            if (cls[i] == cls[0]) ++block0;
        if (block0 < n) return false;
    }
    return true;
}

std::vector<Permutation> pair_conjugators(const std::pair<Permutation, Permutation>& a,
                                          const std::pair<Permutation, Permutation>& b) {
    const int n = a.first.degree();
    if (a.second.degree() != n || b.first.degree() != n || b.second.degree() != n)
        throw DegreeMismatch("pair_conjugators: mixed degrees");

    const Permutation gens_a[2] = {a.first, a.second};
    const Permutation gens_b[2] = {b.first, b.second};
    const Permutation inv_a[2] = {a.first.inverse(), a.second.inverse()};
    const Permutation inv_b[2] = {b.first.inverse(), b.second.inverse()};

    std::vector<Permutation> found;
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);

    // Assign sigma on one <h,v>-component at a time, propagating
    // sigma(g(x)) = g'(sigma(x)) breadth-first and backtracking on conflicts.
    auto propagate = [&](int seed_from, int seed_to, std::vector<int>& trail) -> bool {
        std::vector<int> stack;
        sigma[seed_from] = seed_to;
        used[seed_to] = 1;
        trail.push_back(seed_from);
        stack.push_back(seed_from);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int gi = 0; gi < 2; ++gi) {
                // forward: sigma(g(x)) = g'(sigma(x)); backward with inverses.
                const std::pair<int, int> steps[2] = {
                    {gens_a[gi](x), gens_b[gi](sigma[x])},
                    {inv_a[gi](x), inv_b[gi](sigma[x])},
                };
                for (auto [from, to] : steps) {
                    if (sigma[from] == -1) {
                        if (used[to]) return false;
                        sigma[from] = to;
                        used[to] = 1;
                        trail.push_back(from);
                        stack.push_back(from);
                    } else if (sigma[from] != to) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto undo = [&](std::vector<int>& trail) {
        for (int x : trail) {
            used[sigma[x]] = 0;
            sigma[x] = -1;
        }
        trail.clear();
    };

    std::function<void()> search = [&]() {
        int s = 0;
        while (s < n && sigma[s] != -1) ++s;
        if (s == n) {
            found.emplace_back(sigma);
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t]) continue;
            std::vector<int> trail;
            if (propagate(s, t, trail)) search();
            undo(trail);
        }
    };
    search();

    std::sort(found.begin(), found.end());
    return found;
}

std::string format_cycles(const Permutation& p) {
    auto cyc = p.cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation parse_cycles(const std::string& text, int min_degree) {
    std::vector<std::vector<int>> cycles;
    int max_sym = 0;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw ParseError("expected symbol in cycle notation: " + text);
            int v = std::stoi(text.substr(i, j - i));
            if (v < 1) throw ParseError("symbols are 1-indexed: " + text);
            cyc.push_back(v);
            max_sym = std::max(max_sym, v);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
        ++i; // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    int n = std::max(max_sym, min_degree);
    return Permutation::from_cycles(n, cycles);
}

} // namespace origami
