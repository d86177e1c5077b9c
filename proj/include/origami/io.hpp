#pragma once

#include <string>

#include "json.hpp" // vendored nlohmann/json

#include "origami/census.hpp"
#include "origami/orbit.hpp"

namespace origami {
namespace io {

using nlohmann::json;

inline constexpr int kCacheFormatVersion = 1;

json perm_to_json(const Permutation& p); // 1-indexed image array
Permutation perm_from_json(const json& j);

json origami_to_json(const Origami& x); // {"n", "h", "v"}
Origami origami_from_json(const json& j);

/// Parses any of: the JSON object form, the cycle-pair text form
/// "(2,3),(1,2,3)" (cycles of one permutation juxtaposed), or an H(2)
/// parameter tuple "(w1,h1,t1,w2,h2,t2)".
Origami parse_origami_text(const std::string& text, int min_degree = 0);

std::string digest_hex(std::uint64_t digest);

/// Orbit cache: header (format version, n, stratum, generator set, seed
/// digest) plus the sorted member list.
json orbit_to_cache(const Orbit& orbit, std::uint64_t seed_digest);
Orbit orbit_from_cache(const json& j);
std::string cache_file_name(const std::string& stratum_name, int n, GeneratorSet gens,
                            std::uint64_t seed_digest);

std::string orbit_to_dot(const Orbit& orbit);
json orbit_graph_to_json(const Orbit& orbit);
std::string orbit_edges_csv(const Orbit& orbit);

std::string word_census_csv(const std::string& orbit_name,
                            const std::vector<WordFixCount>& rows);
std::string cusp_census_csv(const std::string& orbit_name, const std::vector<CuspInfo>& cusps);
std::string cycle_census_csv(const std::string& orbit_name,
                             const std::vector<long long>& counts);
json curve_invariants_to_json(const CurveInvariants& ci);
json hlk_to_json(const HLKInvariant& inv);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

} // namespace io
} // namespace origami
