#include "origami/origami.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace origami {

namespace {

bool pair_transitive(const Permutation& h, const Permutation& v) {
    const int n = h.degree();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    const Permutation hi = h.inverse(), vi = v.inverse();
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const Permutation* g : {&h, &v, &hi, &vi}) {
            int q = (*g)(p);
            if (!seen[q]) {
                seen[q] = 1;
                ++count;
                stack.push_back(q);
            }
        }
    }
    return count == n;
}

std::uint64_t fnv1a(std::uint64_t state, std::uint32_t value) {
    for (int b = 0; b < 4; ++b) {
        state ^= (value >> (8 * b)) & 0xffu;
        state *= 1099511628211ull;
    }
    return state;
}

} // namespace

Origami make_origami(Permutation h, Permutation v) {
    if (h.degree() != v.degree())
        throw DegreeMismatch("make_origami: degrees " + std::to_string(h.degree()) + " vs " +
                             std::to_string(v.degree()));
    if (!pair_transitive(h, v))
        throw NotConnected("make_origami: <h,v> is not transitive on " +
                           std::to_string(h.degree()) + " squares");
    return Origami{std::move(h), std::move(v)};
}

Origami make_origami_unchecked(Permutation h, Permutation v) {
    if (h.degree() != v.degree()) throw DegreeMismatch("make_origami_unchecked: degrees differ");
    return Origami{std::move(h), std::move(v)};
}

std::uint64_t origami_digest(const Origami& x) {
    std::uint64_t state = 14695981039346656037ull;
    state = fnv1a(state, static_cast<std::uint32_t>(x.squares()));
    for (int i : x.h.images()) state = fnv1a(state, static_cast<std::uint32_t>(i));
    for (int i : x.v.images()) state = fnv1a(state, static_cast<std::uint32_t>(i));
    return state;
}

CanonicalOrigami canonical_form(const Origami& x) {
    const int n = x.squares();
    const Permutation hi = x.h.inverse(), vi = x.v.inverse();
    const Permutation* edges[4] = {&x.h, &x.v, &hi, &vi};

    std::vector<int> best_h, best_v;
    std::vector<int> label(n), order(n), new_h(n), new_v(n);
    for (int start = 0; start < n; ++start) {
        std::fill(label.begin(), label.end(), -1);
        label[start] = 0;
        order[0] = start;
        int filled = 1;
        for (int head = 0; head < filled; ++head) {
            int sq = order[head];
            for (const Permutation* g : edges) {
                int t = (*g)(sq);
                if (label[t] == -1) {
                    label[t] = filled;
                    order[filled++] = t;
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            new_h[label[i]] = label[x.h(i)];
            new_v[label[i]] = label[x.v(i)];
        }
        if (best_h.empty() || std::tie(new_h, new_v) < std::tie(best_h, best_v)) {
            best_h = new_h;
            best_v = new_v;
        }
    }
    Origami canon{Permutation(std::move(best_h)), Permutation(std::move(best_v))};
    std::uint64_t digest = origami_digest(canon);
    return CanonicalOrigami{std::move(canon), digest};
}

Origami relabel(const Origami& x, const Permutation& sigma) {
    return Origami{conjugate(sigma, x.h), conjugate(sigma, x.v)};
}

bool isomorphic(const Origami& a, const Origami& b) {
    if (a.squares() != b.squares()) return false;
    return canonical_form(a).form == canonical_form(b).form;
}

Permutation corner_permutation(const Origami& x) {
    return compose(x.h, compose(x.v, compose(x.h.inverse(), x.v.inverse())));
}

StratumSignature stratum_and_genus(const Origami& x) {
    const Permutation c = corner_permutation(x);
    CycleData cd = cycle_data(c);
    StratumSignature s;
    for (int len : cd.cycle_type)
        if (len >= 2) s.zero_orders.push_back(len - 1);
    std::sort(s.zero_orders.begin(), s.zero_orders.end());
    int num_cycles = static_cast<int>(cd.cycle_type.size());
    int twice_genus = 2 + x.squares() - num_cycles;
    if (twice_genus % 2 != 0)
        throw ParityError("stratum_and_genus: 2 + n - #cycles is odd (composition convention bug)");
    s.genus = twice_genus / 2;
    return s;
}

std::string stratum_to_string(const StratumSignature& s) {
    std::ostringstream os;
    os << "H(";
    for (size_t i = s.zero_orders.size(); i-- > 0;) {
        os << s.zero_orders[i];
        if (i) os << ",";
    }
    os << ")";
    return os.str();
}

MonodromyClass monodromy_class(const Origami& x) {
    GroupDescription d = group_describe({x.h, x.v});
    GroupOrder full = 1;
    for (int i = 2; i <= x.squares(); ++i) full *= static_cast<unsigned>(i);
    MonodromyClass m;
    m.order = d.order;
    m.primitive = d.primitive;
    if (d.order == full) {
        m.kind = MonodromyKind::Sym;
    } else if (2 * d.order == full && permutation_parity(x.h) == Parity::Even &&
               permutation_parity(x.v) == Parity::Even) {
        m.kind = MonodromyKind::Alt;
    } else {
        m.kind = MonodromyKind::Other;
    }
    return m;
}

Origami minus_one(const Origami& x) { return Origami{x.h.inverse(), x.v.inverse()}; }

std::vector<std::pair<Permutation, HLKInvariant>> hlk_invariants_all(const Origami& x) {
    std::vector<std::pair<Permutation, HLKInvariant>> out;
    for (const Permutation& sigma : pair_conjugators({x.h, x.v}, {x.h.inverse(), x.v.inverse()})) {
        if (!compose(sigma, sigma).is_identity()) continue;
        out.emplace_back(sigma, hlk_for_involution(x, sigma));
    }
    return out;
}

bool has_minus_one(const Origami& x) { return !hlk_invariants_all(x).empty(); }

HLKInvariant hlk_for_involution(const Origami& x, const Permutation& sigma) {
    const int n = x.squares();
    const Permutation hi = x.h.inverse(), vi = x.v.inverse();

    // -I sends (p,q) in square i to (1-p, 1-q) in square sigma(i).
    int l_center = 0, l_bottom = 0, l_left = 0;
    for (int i = 0; i < n; ++i) {
        if (sigma(i) == i) ++l_center;          // over (1/2,1/2)
        if (sigma(i) == vi(i)) ++l_bottom;      // over (1/2,0)
        if (sigma(i) == hi(i)) ++l_left;        // over (0,1/2)
    }

    // Vertex classes are corner-permutation cycles; the involution sends the
    // lower-left corner of i to the upper-right corner of sigma(i), which is
    // the lower-left corner of v(h(sigma(i))).
    const Permutation c = corner_permutation(x);
    std::vector<int> class_of(n, -1);
    std::vector<int> class_size;
    for (int i = 0; i < n; ++i) {
        if (class_of[i] != -1) continue;
        int id = static_cast<int>(class_size.size());
        int len = 0, j = i;
        while (class_of[j] == -1) {
            class_of[j] = id;
            ++len;
            j = c(j);
        }
        class_size.push_back(len);
    }
    HLKInvariant inv;
    std::vector<char> counted(class_size.size(), 0);
    for (int i = 0; i < n; ++i) {
        int cls = class_of[i];
        if (counted[cls]) continue;
        counted[cls] = 1;
        int image = x.v(x.h(sigma(i)));
        if (class_of[image] == cls) {
            if (class_size[cls] == 1)
                ++inv.l0;
            else
                ++inv.singular_fixed;
        }
    }
    inv.ordered_triple = {l_left, l_center, l_bottom};
    inv.unordered_triple = inv.ordered_triple;
    std::sort(inv.unordered_triple.begin(), inv.unordered_triple.end());
    return inv;
}

HLKInvariant hlk_invariant(const Origami& x) {
    auto all = hlk_invariants_all(x);
    if (all.empty())
        throw NoInvolution("hlk_invariant: no involution realizes -I on this origami");
    std::set<HLKInvariant> distinct;
    for (const auto& [sigma, inv] : all) distinct.insert(inv);
    if (distinct.size() > 1) {
        std::ostringstream os;
        os << "hlk_invariant: " << distinct.size() << " involutions disagree:";
        for (const auto& inv : distinct) os << " " << hlk_to_string(inv);
        throw AmbiguousInvolution(os.str());
    }
    return all.front().second;
}

std::string hlk_to_string(const HLKInvariant& inv) {
    std::ostringstream os;
    // Unordered triple printed descending: (0,[3,1,1]).
    os << "(" << inv.l0 << ",[" << inv.unordered_triple[2] << "," << inv.unordered_triple[1]
       << "," << inv.unordered_triple[0] << "])";
    return os.str();
}

namespace {

struct RowData {
    std::vector<std::vector<int>> rows; // each row in h-order from its smallest square
    std::vector<int> row_of;
};

RowData h_rows(const Origami& x) {
    const int n = x.squares();
    RowData rd;
    rd.row_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (rd.row_of[i] != -1) continue;
        int id = static_cast<int>(rd.rows.size());
        std::vector<int> row;
        int j = i;
        do {
            rd.row_of[j] = id;
            row.push_back(j);
            j = x.h(j);
        } while (j != i);
        rd.rows.push_back(std::move(row));
    }
    return rd;
}

bool row_commutes(const Origami& x, const std::vector<int>& row) {
    for (int i : row)
        if (x.v(x.h(i)) != x.h(x.v(i))) return false;
    return true;
}

struct BoundaryInterval {
    int pos;     // start offset along the boundary, anchored at the cylinder column
    int len;
    int partner; // cylinder id on the far side
};

// Maximal translation intervals along one boundary circle. `walk[d]` is the
// square at offset d; `across` maps a square to its neighbour through the
// boundary (v for the top boundary, v^-1 for the bottom).
std::vector<BoundaryInterval> boundary_intervals(const Origami& x, const std::vector<int>& walk,
                                                 const Permutation& across,
                                                 const std::vector<int>& cyl_of_row,
                                                 const std::vector<int>& row_of) {
    const int w = static_cast<int>(walk.size());
    std::vector<int> breaks;
    for (int d = 0; d < w; ++d) {
        int prev = walk[(d + w - 1) % w];
        if (x.h(across(prev)) != across(walk[d])) breaks.push_back(d);
    }
    std::vector<BoundaryInterval> out;
    if (breaks.empty()) return out; // smooth circle: torus-like
    for (size_t b = 0; b < breaks.size(); ++b) {
        int start = breaks[b];
        int end = breaks[(b + 1) % breaks.size()];
        int len = (end - start + w - 1) % w + 1;
        out.push_back({start, len, cyl_of_row[row_of[across(walk[start])]]});
    }
    return out;
}

} // namespace

CylinderDecomposition cylinder_decomposition(const Origami& x) {
    const int n = x.squares();
    RowData rd = h_rows(x);
    const int nrows = static_cast<int>(rd.rows.size());

    // Merge row r with the row above it when v conjugates the h-translation.
    std::vector<int> parent(nrows);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<char> commutes(nrows, 0);
    std::vector<int> up(nrows, -1);
    for (int r = 0; r < nrows; ++r) {
        if (row_commutes(x, rd.rows[r])) {
            commutes[r] = 1;
            up[r] = rd.row_of[x.v(rd.rows[r][0])];
            int a = find(r), b = find(up[r]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }

    std::map<int, std::vector<int>> groups; // cylinder root -> rows
    for (int r = 0; r < nrows; ++r) groups[find(r)].push_back(r);
    std::vector<int> cyl_of_row(nrows, -1);
    {
        int id = 0;
        for (auto& [root, rows] : groups) {
            for (int r : rows) cyl_of_row[r] = id;
            ++id;
        }
    }

    const Permutation vi = x.v.inverse();
    CylinderDecomposition dec;
    for (auto& [root, rows] : groups) {
        // Bottom row: no commuting row feeds into it; for a torus every row
        // does, so take the row holding the smallest square.
        std::set<int> has_incoming;
        for (int r : rows)
            if (commutes[r]) has_incoming.insert(up[r]);
        int bottom = -1;
        for (int r : rows)
            if (!has_incoming.count(r)) bottom = (bottom == -1 ? r : std::min(bottom, r));
        if (bottom == -1) {
            bottom = rows.front();
            for (int r : rows)
                if (rd.rows[r][0] < rd.rows[bottom][0]) bottom = r;
        }

        Cylinder cyl;
        cyl.height = static_cast<int>(rows.size());
        const int w = static_cast<int>(rd.rows[bottom].size());
        cyl.width = w;
        for (int r : rows)
            if (static_cast<int>(rd.rows[r].size()) != w)
                throw Error("cylinder rows of unequal width (gluing inconsistency)");

        // Anchor column: smallest square of the bottom row, walked upward.
        int anchor = *std::min_element(rd.rows[bottom].begin(), rd.rows[bottom].end());
        int top_anchor = anchor;
        for (int step = 0; step + 1 < cyl.height; ++step) top_anchor = x.v(top_anchor);

        std::vector<int> bottom_walk(w), top_walk(w);
        for (int d = 0, sq = anchor; d < w; ++d, sq = x.h(sq)) bottom_walk[d] = sq;
        for (int d = 0, sq = top_anchor; d < w; ++d, sq = x.h(sq)) top_walk[d] = sq;
        for (int sq : bottom_walk) cyl.bottom_row.push_back(sq + 1);

        auto top_marks = boundary_intervals(x, top_walk, x.v, cyl_of_row, rd.row_of);
        auto bot_marks = boundary_intervals(x, bottom_walk, vi, cyl_of_row, rd.row_of);

        if (top_marks.empty() || bot_marks.empty()) {
            // Torus: the column re-enters the bottom row; the h-offset is the twist.
            int ret = x.v(top_anchor);
            int t = 0, sq = anchor;
            while (sq != ret && t < w) {
                sq = x.h(sq);
                ++t;
            }
            cyl.twist = (sq == ret) ? t % w : 0;
        } else {
            // Align marked boundary corner sequences; smallest aligning shift wins.
            int twist = -1;
            if (top_marks.size() == bot_marks.size()) {
                for (int t = 0; t < w && twist == -1; ++t) {
                    bool ok = true;
                    for (const auto& tm : top_marks) {
                        bool matched = false;
                        for (const auto& bm : bot_marks) {
                            if (bm.pos == (tm.pos + t) % w && bm.len == tm.len &&
                                bm.partner == tm.partner) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) twist = t;
                }
            }
            if (twist == -1)
                twist = ((bot_marks.front().pos - top_marks.front().pos) % w + w) % w;
            cyl.twist = twist;
        }
        dec.cylinders.push_back(std::move(cyl));
    }

    std::sort(dec.cylinders.begin(), dec.cylinders.end(), [](const Cylinder& a, const Cylinder& b) {
        return std::tie(a.width, a.height, a.twist, a.bottom_row) <
               std::tie(b.width, b.height, b.twist, b.bottom_row);
    });

    int area = 0;
    for (const Cylinder& c : dec.cylinders) area += c.width * c.height;
    if (area != n) throw Error("cylinder areas do not sum to n (decomposition bug)");
    return dec;
}

namespace {

Origami act_T(const Origami& x) { return {x.h, compose(x.v, x.h.inverse())}; }
Origami act_T_inv(const Origami& x) { return {x.h, compose(x.v, x.h)}; }
Origami act_S(const Origami& x) { return {compose(x.h, x.v.inverse()), x.v}; }

Origami quarter_turn(const Origami& x) {
    // R = T^-1 S T^-1.
    return act_T_inv(act_S(act_T_inv(x)));
}

} // namespace

int vertical_cylinder_count(const Origami& x) {
    return static_cast<int>(cylinder_decomposition(quarter_turn(x)).cylinders.size());
}

std::string H2Params::to_string() const {
    std::ostringstream os;
    os << "(" << w1 << "," << h1 << "," << t1 << "," << w2 << "," << h2 << "," << t2 << ")";
    return os.str();
}

Origami from_h2_params(int w1, int h1, int t1, int w2, int h2, int t2) {
    if (w1 < 1 || w2 <= w1 || h1 < 1 || h2 < 1 || t1 < 0 || t1 >= w1 || t2 < 0 || t2 >= w2)
        throw BadParams("from_h2_params: need 1 <= w1 < w2, h_i >= 1, 0 <= t_i < w_i; got " +
                        H2Params{w1, h1, t1, w2, h2, t2}.to_string());
    const int n = w1 * h1 + w2 * h2;
    auto bot = [&](int r, int xx) { return r * w2 + xx; };
    auto top = [&](int r, int xx) { return h2 * w2 + r * w1 + xx; };

    std::vector<int> h(n), v(n);
    for (int r = 0; r < h2; ++r)
        for (int xx = 0; xx < w2; ++xx) h[bot(r, xx)] = bot(r, (xx + 1) % w2);
    for (int r = 0; r < h1; ++r)
        for (int xx = 0; xx < w1; ++xx) h[top(r, xx)] = top(r, (xx + 1) % w1);

    // The wide cylinder's gluing offset runs against the boundary walk, so
    // that a T-shear advances both twists by their heights in step.
    const int off2 = (w2 - t2) % w2;
    for (int r = 0; r + 1 < h2; ++r)
        for (int xx = 0; xx < w2; ++xx) v[bot(r, xx)] = bot(r + 1, xx);
    for (int xx = 0; xx < w2; ++xx) {
        if (xx < w1)
            v[bot(h2 - 1, xx)] = top(0, (xx + t1) % w1);
        else
            v[bot(h2 - 1, xx)] = bot(0, (xx + off2) % w2);
    }
    for (int r = 0; r + 1 < h1; ++r)
        for (int xx = 0; xx < w1; ++xx) v[top(r, xx)] = top(r + 1, xx);
    for (int xx = 0; xx < w1; ++xx) v[top(h1 - 1, xx)] = bot(0, (off2 + xx) % w2);

    return make_origami(Permutation(std::move(h)), Permutation(std::move(v)));
}

Origami from_h2_params(const H2Params& p) {
    return from_h2_params(p.w1, p.h1, p.t1, p.w2, p.h2, p.t2);
}

std::optional<H2Params> h2_params_of(const Origami& x) {
    StratumSignature s = stratum_and_genus(x);
    if (s.zero_orders != std::vector<int>{2}) return std::nullopt;
    CylinderDecomposition dec = cylinder_decomposition(x);
    if (dec.cylinders.size() != 2) return std::nullopt;
    const Cylinder& narrow = dec.cylinders[0];
    const Cylinder& wide = dec.cylinders[1];
    if (narrow.width >= wide.width) return std::nullopt;
    // Undo the wide cylinder's reversed gluing offset (see from_h2_params).
    int t2 = (wide.width - wide.twist) % wide.width;
    H2Params p{narrow.width, narrow.height, narrow.twist, wide.width, wide.height, t2};
    if (!isomorphic(from_h2_params(p), x))
        throw Error("h2_params_of: reconstructed surface differs (twist convention bug)");
    return p;
}

CuspData cusp_data(const Origami& x) {
    CanonicalOrigami self = canonical_form(x);
    std::vector<CanonicalOrigami> orbit{self};
    Origami y = act_T(x);
    int width = 1;
    for (;;) {
        CanonicalOrigami cy = canonical_form(y);
        if (cy == self) break;
        orbit.push_back(cy);
        y = act_T(y);
        ++width;
        if (width > 16 * x.squares() + 16)
            throw Error("cusp_data: T-orbit did not close (action bug)");
    }

    CuspData out;
    out.width = width;

    std::optional<H2Params> params = h2_params_of(x);
    if (params) {
        int g1 = std::gcd(params->w1, params->h1);
        int g2 = std::gcd(params->w2, params->h2);
        int expect = std::lcm(params->w1 / g1, params->w2 / g2);
        if (expect != width)
            throw Error("cusp_data: width " + std::to_string(width) + " != lcm formula " +
                        std::to_string(expect));
        // Cusp representative: the member with 0 <= t_i < gcd(w_i, h_i) when
        // one exists. A T-orbit reaches such twists iff w_1/g_1 and w_2/g_2
        // are coprime (always true at prime n, where gcd(w1/g1, w2/g2)
        // divides n); otherwise fall back to the canonical-minimal member.
        std::optional<CanonicalOrigami> rep;
        for (const CanonicalOrigami& m : orbit) {
            std::optional<H2Params> q = h2_params_of(m.form);
            if (q && q->t1 < g1 && q->t2 < g2) {
                if (rep) throw Error("cusp_data: twist-normalized representative not unique");
                rep = m;
            }
        }
        if (!rep) {
            if (std::gcd(params->w1 / g1, params->w2 / g2) == 1)
                throw Error("cusp_data: coprime moduli but no normalized representative");
            rep = *std::min_element(orbit.begin(), orbit.end());
        }
        out.representative = *rep;
    } else {
        out.representative = *std::min_element(orbit.begin(), orbit.end());
    }
    return out;
}

} // namespace origami
