#include "origami/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace origami {
namespace io {

json perm_to_json(const Permutation& p) {
    json arr = json::array();
    for (int i = 0; i < p.degree(); ++i) arr.push_back(p(i) + 1);
    return arr;
}

Permutation perm_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("permutation JSON must be an array of 1-indexed images");
    std::vector<int> im;
    for (const auto& v : j) im.push_back(v.get<int>() - 1);
    return Permutation(std::move(im));
}

json origami_to_json(const Origami& x) {
    return json{{"n", x.squares()}, {"h", perm_to_json(x.h)}, {"v", perm_to_json(x.v)}};
}

Origami origami_from_json(const json& j) {
    Permutation h = perm_from_json(j.at("h"));
    Permutation v = perm_from_json(j.at("v"));
    if (j.contains("n") && j.at("n").get<int>() != h.degree())
        throw ParseError("origami JSON: n disagrees with the image tables");
    return make_origami(std::move(h), std::move(v));
}

namespace {

// Splits "(...)(...),(...)" into the h-part and v-part at the top-level comma
// that separates two parenthesized groups.
bool split_cycle_pair(const std::string& text, std::string& h_part, std::string& v_part) {
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            h_part = text.substr(0, i);
            v_part = text.substr(i + 1);
            return true;
        }
    }
    return false;
}

} // namespace

Origami parse_origami_text(const std::string& text, int min_degree) {
    std::string trimmed = text;
    auto drop_space = [](std::string& s) {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                s.end());
    };
    drop_space(trimmed);
    if (trimmed.empty()) throw ParseError("empty origami text");
    if (trimmed.front() == '{') return origami_from_json(json::parse(text));

    // Strip one layer of wrapping parentheses when it encloses the whole pair:
    // "((2,3),(1,2,3))".
    if (trimmed.size() >= 2 && trimmed.front() == '(' && trimmed.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (size_t i = 0; i + 1 < trimmed.size(); ++i) {
            if (trimmed[i] == '(') ++depth;
            if (trimmed[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        std::string inner = trimmed.substr(1, trimmed.size() - 2);
        if (wraps && inner.find('(') != std::string::npos) trimmed = inner;
    }

    std::string h_part, v_part;
    if (split_cycle_pair(trimmed, h_part, v_part)) {
        Permutation h = parse_cycles(h_part, min_degree);
        Permutation v = parse_cycles(v_part, min_degree);
        int n = std::max(h.degree(), v.degree());
        auto pad = [&](const Permutation& p) {
            std::vector<int> im(n);
            for (int i = 0; i < n; ++i) im[i] = i < p.degree() ? p(i) : i;
            return Permutation(std::move(im));
        };
        return make_origami(pad(h), pad(v));
    }

    // Single group: an H(2) parameter tuple "(w1,h1,t1,w2,h2,t2)".
    std::string inner = trimmed;
    if (inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    std::vector<int> vals;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) vals.push_back(std::stoi(item));
    if (vals.size() == 6)
        return from_h2_params(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
    throw ParseError("unrecognized origami text: " + text);
}

std::string digest_hex(std::uint64_t digest) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << digest;
    return os.str();
}

json orbit_to_cache(const Orbit& orbit, std::uint64_t seed_digest) {
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["n"] = orbit.members.empty() ? 0 : orbit.members.front().form.squares();
    j["stratum"] = orbit.stratum.zero_orders;
    j["genus"] = orbit.stratum.genus;
    j["generators"] = orbit.generators == GeneratorSet::Parabolic ? "parabolic" : "elliptic";
    j["seed_digest"] = digest_hex(seed_digest);
    j["label"] = orbit.label;
    json members = json::array();
    for (const CanonicalOrigami& m : orbit.members) members.push_back(origami_to_json(m.form));
    j["members"] = std::move(members);
    return j;
}

Orbit orbit_from_cache(const json& j) {
    if (j.at("format_version").get<int>() != kCacheFormatVersion)
        throw IoError("orbit cache has format version " +
                      j.at("format_version").dump() + ", expected " +
                      std::to_string(kCacheFormatVersion));
    if (j.at("members").empty()) throw IoError("orbit cache has no members");
    Origami seed = origami_from_json(j.at("members").front());
    GeneratorSet gens = j.at("generators").get<std::string>() == "elliptic"
                            ? GeneratorSet::Elliptic
                            : GeneratorSet::Parabolic;
    Orbit orbit = enumerate_orbit(seed, gens);
    orbit.label = j.value("label", std::string());
    if (static_cast<size_t>(orbit.size()) != j.at("members").size())
        throw IoError("orbit cache member count disagrees with the closure");
    for (size_t i = 0; i < j.at("members").size(); ++i) {
        Origami m = origami_from_json(j.at("members")[i]);
        if (!(orbit.members[i].form == m))
            throw IoError("orbit cache member list is not the canonical closure");
    }
    return orbit;
}

std::string cache_file_name(const std::string& stratum_name, int n, GeneratorSet gens,
                            std::uint64_t seed_digest) {
    std::ostringstream os;
    os << "orbit-v" << kCacheFormatVersion << "-" << stratum_name << "-n" << n << "-"
       << (gens == GeneratorSet::Parabolic ? "parabolic" : "elliptic") << "-"
       << digest_hex(seed_digest) << ".json";
    return os.str();
}

std::string orbit_to_dot(const Orbit& orbit) {
    OrbitGraph g = build_graph(orbit);
    std::ostringstream os;
    os << "graph orbit {\n";
    for (int v = 0; v < g.vertices; ++v)
        os << "  " << v << " [label=\"" << digest_hex(orbit.members[v].digest).substr(8)
           << "\"];\n";
    for (const auto& e : g.edges)
        os << "  " << e.u << " -- " << e.v << " [label=\"" << sl2z::letter_name(e.label)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

json orbit_graph_to_json(const Orbit& orbit) {
    OrbitGraph g = build_graph(orbit);
    json j;
    j["vertices"] = json::array();
    for (const CanonicalOrigami& m : orbit.members)
        j["vertices"].push_back(digest_hex(m.digest));
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back(json{{"u", e.u},
                                  {"v", e.v},
                                  {"label", sl2z::letter_name(e.label)},
                                  {"loop", e.loop}});
    return j;
}

std::string orbit_edges_csv(const Orbit& orbit) {
    OrbitGraph g = build_graph(orbit);
    std::ostringstream os;
    os << "u,v,label,loop\n";
    for (const auto& e : g.edges)
        os << e.u << "," << e.v << "," << sl2z::letter_name(e.label) << "," << (e.loop ? 1 : 0)
           << "\n";
    return os.str();
}

std::string word_census_csv(const std::string& orbit_name,
                            const std::vector<WordFixCount>& rows) {
    std::ostringstream os;
    os << "orbit,word,kind,fixed\n";
    for (const auto& r : rows) {
        const char* kind = "central";
        switch (r.info.kind) {
            case sl2z::WordKind::Hyperbolic: kind = "hyperbolic"; break;
            case sl2z::WordKind::Parabolic: kind = "parabolic"; break;
            case sl2z::WordKind::Elliptic: kind = "elliptic"; break;
            default: break;
        }
        os << orbit_name << "," << r.word.to_string() << "," << kind << ","
           << r.fixed_members.size() << "\n";
    }
    return os.str();
}

std::string cusp_census_csv(const std::string& orbit_name, const std::vector<CuspInfo>& cusps) {
    std::ostringstream os;
    os << "orbit,width,size,representative,params\n";
    for (const auto& c : cusps) {
        os << orbit_name << "," << c.width << "," << c.members.size() << ",\""
           << format_cycles(c.representative.form.h) << ","
           << format_cycles(c.representative.form.v) << "\","
           << (c.normalized ? c.normalized->to_string() : "") << "\n";
    }
    return os.str();
}

std::string cycle_census_csv(const std::string& orbit_name,
                             const std::vector<long long>& counts) {
    std::ostringstream os;
    os << "orbit,length,count\n";
    for (size_t i = 0; i < counts.size(); ++i)
        os << orbit_name << "," << i + 1 << "," << counts[i] << "\n";
    return os.str();
}

json curve_invariants_to_json(const CurveInvariants& ci) {
    return json{{"V", ci.V},
                {"chi_num", ci.chi.numerator()},
                {"chi_den", ci.chi.denominator()},
                {"e2", ci.e2},
                {"e3", ci.e3},
                {"cusps", ci.cusps},
                {"genus", ci.genus}};
}

json hlk_to_json(const HLKInvariant& inv) {
    return json{{"l0", inv.l0},
                {"singular_fixed", inv.singular_fixed},
                {"ordered", inv.ordered_triple},
                {"unordered", {inv.unordered_triple[2], inv.unordered_triple[1],
                               inv.unordered_triple[0]}}};
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << contents;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace io
} // namespace origami
