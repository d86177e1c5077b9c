#include <cstdlib>
#include <sstream>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "origami/arith.hpp"
#include "origami/census.hpp"
#include "origami/io.hpp"
#include "origami/orbit.hpp"
#include "origami/verify.hpp"

namespace fs = std::filesystem;
using namespace origami;

namespace {

struct CommonOpts {
    std::string stratum = "H2";
    int n = 0;
    int d = 0;
    std::string generators = "parabolic";
    int max_word_len = 4;
    int brute_cap = 10;
    int workers = 1;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
    std::string seed_text;
};

StratumSignature stratum_of_name(const std::string& name) {
    if (name == "H2") return StratumSignature{{2}, 2};
    if (name == "H11") return StratumSignature{{1, 1}, 2};
    if (name == "H4" || name == "H4prym") return StratumSignature{{4}, 3};
    if (name == "H6prym") return StratumSignature{{6}, 4};
    throw BadParams("unknown stratum name: " + name);
}

GeneratorSet generators_of_name(const std::string& name) {
    if (name == "parabolic") return GeneratorSet::Parabolic;
    if (name == "elliptic") return GeneratorSet::Elliptic;
    throw BadParams("unknown generator set: " + name);
}

std::string cache_directory(const CommonOpts& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("ORIGAMI_CACHE_DIR")) return env;
    return ".";
}

// Seeds: explicit --seed text, or deterministic defaults per stratum.
std::vector<Origami> resolve_seeds(const CommonOpts& o) {
    if (!o.seed_text.empty()) return {io::parse_origami_text(o.seed_text, o.n)};
    if (o.n <= 0) throw BadParams("--n is required when no --seed is given");
    StratumSignature s = stratum_of_name(o.stratum);
    std::vector<Origami> seeds = scan_seeds(o.n, s);
    if (o.stratum == "H2") {
        // The parameter builders reach both odd-n orbits directly.
        for (const Origami& x : all_h2_origamis(o.n)) {
            Origami c = canonical_form(x).form;
            if (generators_primitive({c.h, c.v})) seeds.push_back(c);
            if (seeds.size() > 512) break;
        }
    }
    if (o.stratum == "H4prym" || o.stratum == "H6prym") {
        int want = o.stratum == "H4prym" ? 4 : 2;
        std::vector<Origami> filtered;
        for (const Origami& x : seeds)
            for (const auto& [sigma, inv] : hlk_invariants_all(x))
                if (inv.total_fixed_points() == want) {
                    filtered.push_back(x);
                    break;
                }
        seeds = std::move(filtered);
    }
    if (seeds.empty()) throw BadParams("no seed found for " + o.stratum + " at n = " +
                                       std::to_string(o.n) + "; pass --seed");
    return seeds;
}

Orbit orbit_with_cache(const CommonOpts& o, const Origami& seed) {
    GeneratorSet gens = generators_of_name(o.generators);
    std::uint64_t seed_digest = canonical_form(seed).digest;
    fs::path dir = cache_directory(o);
    fs::path file = dir / io::cache_file_name(o.stratum, seed.squares(), gens, seed_digest);
    if (fs::exists(file)) {
        std::cerr << "cache hit: " << file.string() << "\n";
        return io::orbit_from_cache(io::json::parse(io::read_text_file(file.string())));
    }
    Orbit orbit = enumerate_orbit(seed, gens, o.workers);
    orbit.label = classify_orbit_label(orbit);
    std::error_code ec;
    fs::create_directories(dir, ec);
    io::write_text_file(file.string(), io::orbit_to_cache(orbit, seed_digest).dump(2) + "\n");
    std::cerr << "cached: " << file.string() << "\n";
    return orbit;
}

void emit(const CommonOpts& o, const std::string& contents) {
    if (o.out.empty())
        std::cout << contents;
    else
        io::write_text_file(o.out, contents);
}

std::string orbit_name(const CommonOpts& o, const Orbit& orbit) {
    return o.stratum + "-n" + std::to_string(orbit.members.front().form.squares()) +
           (orbit.label.empty() ? "" : "-" + orbit.label);
}

int cmd_orbit(const CommonOpts& o) {
    Orbit orbit = orbit_with_cache(o, resolve_seeds(o).front());
    std::cout << "orbit " << orbit_name(o, orbit) << ": " << orbit.size() << " origamis, stratum "
              << stratum_to_string(orbit.stratum) << "\n";
    return 0;
}

int cmd_graph(const CommonOpts& o, const std::string& dot_path) {
    Orbit orbit = orbit_with_cache(o, resolve_seeds(o).front());
    std::string body;
    if (!dot_path.empty() || o.format == "dot") {
        body = io::orbit_to_dot(orbit);
        if (!dot_path.empty()) {
            io::write_text_file(dot_path, body);
            std::cout << "wrote " << dot_path << " (" << orbit.size() << " vertices)\n";
            return 0;
        }
    } else if (o.format == "json") {
        body = io::orbit_graph_to_json(orbit).dump(2) + "\n";
    } else if (o.format == "csv") {
        body = io::orbit_edges_csv(orbit);
    } else {
        throw BadParams("graph: unknown format " + o.format);
    }
    emit(o, body);
    return 0;
}

int cmd_census(const CommonOpts& o) {
    Orbit orbit = orbit_with_cache(o, resolve_seeds(o).front());
    std::string name = orbit_name(o, orbit);
    std::ostringstream os;
    os << io::word_census_csv(name, word_census(orbit, o.max_word_len));
    os << io::cusp_census_csv(name, cusp_census(orbit));
    os << io::cycle_census_csv(name, cycle_census(build_graph(orbit), 4));
    emit(o, os.str());
    return 0;
}

int cmd_invariants(const CommonOpts& o) {
    Orbit orbit = orbit_with_cache(o, resolve_seeds(o).front());
    io::json j;
    j["orbit"] = orbit_name(o, orbit);
    j["size"] = orbit.size();
    j["stratum"] = stratum_to_string(orbit.stratum);
    const Origami& rep = orbit.members.front().form;
    MonodromyClass m = monodromy_class(rep);
    j["monodromy"] = io::json{{"order", group_order_to_string(m.order)},
                              {"primitive", m.primitive},
                              {"kind", m.kind == MonodromyKind::Alt   ? "Alt"
                                       : m.kind == MonodromyKind::Sym ? "Sym"
                                                                      : "Other"}};
    auto hlk = hlk_invariants_all(rep);
    if (!hlk.empty()) {
        j["hlk"] = io::hlk_to_json(hlk.front().second);
        j["hlk_text"] = hlk_to_string(hlk.front().second);
        j["curve"] = io::curve_invariants_to_json(curve_invariants(orbit));
    } else {
        j["hlk"] = nullptr;
    }
    emit(o, j.dump(2) + "\n");
    return 0;
}

int cmd_arith(const CommonOpts& o, long long class_numbers_to, long long h2sq_n, long long h3_D,
              const std::vector<long long>& e3_args, const std::string& predict) {
    std::ostringstream os;
    bool did = false;
    if (class_numbers_to > 0) {
        did = true;
        os << "D,h,units,h_reduced\n";
        for (long long D = -3; D >= -class_numbers_to; --D) {
            long long mod = ((D % 4) + 4) % 4;
            if (mod != 0 && mod != 1) continue;
            auto r = arith::class_numbers(D);
            os << D << "," << r.h << "," << r.unit_count << ","
               << arith::rational_to_string(r.h_reduced) << "\n";
        }
    }
    if (h2sq_n > 0) {
        did = true;
        auto s = arith::orbifold_set_h2sq(h2sq_n);
        os << "H2sq(" << h2sq_n * h2sq_n << ") size " << s.count() << ", e2 = "
           << arith::rational_to_string(arith::e2_square_discriminant(h2sq_n)) << "\n";
        for (auto& t : s.triples) os << t[0] << "," << t[1] << "," << t[2] << "\n";
    }
    if (h3_D > 0) {
        did = true;
        auto s = arith::orbifold_set_h3(h3_D);
        os << "H3(" << h3_D << ") size " << s.count() << "\n";
        for (auto& t : s.triples) os << t[0] << "," << t[1] << "," << t[2] << "\n";
    }
    if (e3_args.size() == 3) {
        did = true;
        os << "e3(d=" << e3_args[0] << ",n=" << e3_args[1] << ",eps=" << e3_args[2] << ") = "
           << arith::rational_to_string(
                  arith::e3_h11(e3_args[0], e3_args[1], static_cast<int>(e3_args[2])))
           << "\n";
    }
    if (!predict.empty()) {
        did = true;
        std::map<std::string, arith::OrbitFamily> fams{
            {"H2_A", arith::OrbitFamily::H2_A},
            {"H2_B", arith::OrbitFamily::H2_B},
            {"Zmiaikou_Alt", arith::OrbitFamily::Zmiaikou_Alt},
            {"Zmiaikou_Sym", arith::OrbitFamily::Zmiaikou_Sym},
            {"Duryev", arith::OrbitFamily::Duryev}};
        auto it = fams.find(predict);
        if (it == fams.end()) throw BadParams("unknown family: " + predict);
        arith::OrbitSizeParams p{o.n, o.d, 0};
        os << predict << "(n=" << o.n << ",d=" << o.d
           << ") = " << arith::predicted_orbit_size(it->second, p) << "\n";
    }
    if (!did) throw BadParams("arith: nothing requested (see --help)");
    emit(o, os.str());
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, bool slow, int max_n) {
    verify::VerifyOptions vo;
    vo.slow = slow;
    vo.workers = o.workers;
    vo.max_n = max_n;
    vo.brute_cap = o.brute_cap;
    verify::VerifyReport rep = verify::run_suite(suite, vo);
    std::cout << verify::format_report(rep);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL(2,Z)-orbits of square-tiled surfaces: enumeration, censuses, invariants"};
    app.require_subcommand(1);

    CommonOpts o;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--stratum", o.stratum, "H2, H11, H4, H4prym, H6prym")
            ->default_val("H2");
        cmd->add_option("--n", o.n, "square count");
        cmd->add_option("--d", o.d, "torus cover degree (arith formulas)");
        cmd->add_option("--generators", o.generators, "parabolic or elliptic")
            ->default_val("parabolic");
        cmd->add_option("--max-word-len", o.max_word_len, "word census length cap")
            ->default_val(4);
        cmd->add_option("--brute-cap", o.brute_cap, "brute enumeration cap")->default_val(10);
        cmd->add_option("--workers", o.workers, "worker threads")->default_val(1);
        cmd->add_option("--cache-dir", o.cache_dir, "orbit cache directory");
        cmd->add_option("--out", o.out, "output file (stdout when omitted)");
        cmd->add_option("--format", o.format, "json, csv or dot")->default_val("json");
        cmd->add_option("--seed", o.seed_text,
                        "seed origami: JSON, cycle pair \"(2,3),(1,2,3)\", or H(2) parameters "
                        "\"(w1,h1,t1,w2,h2,t2)\"");
    };

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "enumerate an orbit and cache it");
    add_common(orbit_cmd);

    std::string dot_path;
    CLI::App* graph_cmd = app.add_subcommand("graph", "export the orbit graph");
    add_common(graph_cmd);
    graph_cmd->add_option("--dot", dot_path, "write DOT to this path");

    CLI::App* census_cmd = app.add_subcommand("census", "word/cusp/cycle censuses as CSV");
    add_common(census_cmd);

    CLI::App* inv_cmd = app.add_subcommand("invariants", "HLK/monodromy/curve invariants JSON");
    add_common(inv_cmd);

    CLI::App* arith_cmd = app.add_subcommand("arith", "quadric and class-number tables");
    add_common(arith_cmd);
    long long cn_to = 0, h2sq_n = 0, h3_D = 0;
    std::vector<long long> e3_args;
    std::string predict;
    arith_cmd->add_option("--class-numbers", cn_to, "emit h(D) for -D up to this bound");
    arith_cmd->add_option("--h2sq", h2sq_n, "emit H2sq(n^2) for this n");
    arith_cmd->add_option("--h3", h3_D, "emit H3(D) for this D");
    arith_cmd->add_option("--e3", e3_args, "evaluate e3: d n epsilon")->expected(3);
    arith_cmd->add_option("--predict", predict,
                          "orbit-size family: H2_A H2_B Zmiaikou_Alt Zmiaikou_Sym Duryev");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
    add_common(verify_cmd);
    std::string suite = "all";
    bool slow = false;
    int max_n = 0;
    verify_cmd->add_option("--suite", suite, "h2, h11, prym4, prym6, h4 or all")
        ->default_val("all");
    verify_cmd->add_flag("--slow", slow, "include the n=10 brute-force completeness runs");
    verify_cmd->add_option("--max-n", max_n, "clamp every criterion's n range");

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbit_cmd->parsed()) return cmd_orbit(o);
        if (graph_cmd->parsed()) return cmd_graph(o, dot_path);
        if (census_cmd->parsed()) return cmd_census(o);
        if (inv_cmd->parsed()) return cmd_invariants(o);
        if (arith_cmd->parsed()) return cmd_arith(o, cn_to, h2sq_n, h3_D, e3_args, predict);
        if (verify_cmd->parsed()) return cmd_verify(o, suite, slow, max_n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
