#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "occ/errors.hpp"
#include "occ/families.hpp"
#include "occ/game.hpp"
#include "occ/serial.hpp"

using namespace occ;

namespace {

std::string seq_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

struct CommonFlags {
    bool assume_d1_zero = false;
    bool minimize_move2_cost = false;
    std::string format = "text";
    long long bound = 1000000;
    long long precision_cap = default_precision_cap;
    long long state_cap = 2000000;

    CertifyOptions options() const {
        CertifyOptions o;
        o.assume_d1_zero = assume_d1_zero;
        o.minimize_move2_cost = minimize_move2_cost;
        o.bound = bound;
        o.precision_cap = precision_cap;
        o.state_cap = state_cap;
        return o;
    }
};

void add_bounds(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--bound", f.bound, "enumeration size bound");
    cmd->add_option("--precision-cap", f.precision_cap, "bits cap for sign determination");
    cmd->add_option("--state-cap", f.state_cap, "game solver state cap");
}

void add_format(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
}

// Group, tuple, and target orbit from either a JSON input file or an angle
// vector; exactly one source must be given.
struct Loaded {
    SemidirectGroup G;
    GeneratingTuple sigma;
    std::size_t orbit_index = 0;
};

Loaded load_source(const std::string& input_path, const std::vector<long long>& polygon_angles,
                   long long orbit, long long bound) {
    if (input_path.empty() == polygon_angles.empty())
        throw InputError("provide exactly one of --input and --polygon");
    Loaded out;
    if (!polygon_angles.empty()) {
        PolygonData poly = dihedral_from_polygon(polygon_angles, bound);
        out.G = std::move(poly.G);
        out.sigma = std::move(poly.sigma);
        out.orbit_index = orbit >= 0 ? static_cast<std::size_t>(orbit) : 1;
    } else {
        ParsedInput parsed = parse_input(load_json(input_path), bound);
        out.G = std::move(parsed.G);
        out.sigma = std::move(parsed.sigma);
        if (orbit >= 0)
            out.orbit_index = static_cast<std::size_t>(orbit);
        else if (parsed.orbit_index)
            out.orbit_index = *parsed.orbit_index;
        else
            throw InputError("no target orbit: add phi1_rep to the input or pass --orbit");
    }
    return out;
}

int emit_certificate(const Loaded& in, const CertifyOptions& options, const Certificate& cert,
                     const std::string& format, const Json* prologue = nullptr) {
    if (format == "json") {
        Json doc;
        if (prologue) doc["construction"] = *prologue;
        Json body = certificate_json(in.G, in.sigma, in.orbit_index, options, cert);
        for (auto& [key, value] : body.items()) doc[key] = value;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (prologue)
            for (auto& [key, value] : prologue->items()) {
                std::cout << key << ": ";
                if (value.is_string())
                    std::cout << value.get<std::string>();
                else
                    std::cout << value.dump();
                std::cout << "\n";
            }
        std::cout << certificate_text(cert);
    }
    return cert.passed ? 0 : 1;
}

int run_certify(const std::string& input_path, const std::vector<long long>& polygon_angles,
                const std::string& replay_path, long long orbit, const std::string& algorithm,
                const CommonFlags& flags) {
    if (!replay_path.empty()) {
        if (!input_path.empty() || !polygon_angles.empty())
            throw InputError("--replay excludes --input and --polygon");
        ReplayOutcome outcome = replay_certificate(load_json(replay_path));
        if (flags.format == "json") {
            Json doc;
            doc["replay_ok"] = outcome.mismatches.empty();
            doc["mismatches"] = outcome.mismatches;
            doc["verdict"] = outcome.fresh.passed ? "PASS" : "FAIL";
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "replay: "
                      << (outcome.mismatches.empty() ? "verdict reproduced" : "MISMATCH") << "\n";
            for (const std::string& m : outcome.mismatches) std::cout << "  " << m << "\n";
            std::cout << certificate_text(outcome.fresh);
        }
        if (!outcome.mismatches.empty()) return 1;
        return outcome.fresh.passed ? 0 : 1;
    }

    Loaded in = load_source(input_path, polygon_angles, orbit, flags.bound);
    CertifyOptions options = flags.options();
    Certificate cert = algorithm == "main"
                           ? certify_main2(in.G, in.sigma, in.orbit_index, options)
                           : certify_algorithm2(in.G, in.sigma, in.orbit_index, options);
    return emit_certificate(in, options, cert, flags.format);
}

int run_game(const std::string& input_path, const std::vector<long long>& polygon_angles,
             long long orbit, const CommonFlags& flags) {
    Loaded in = load_source(input_path, polygon_angles, orbit, flags.bound);
    IsotypicTable table = isotypic_table(in.G, in.sigma, flags.bound);
    GameOptions game_options{flags.minimize_move2_cost, flags.state_cap};
    GameSpec spec = build_game(in.G, in.sigma, table, in.orbit_index, flags.bound, game_options);
    GameResult result = solve_game(spec, game_options);

    if (flags.format == "json") {
        Json doc;
        Json s;
        s["tokens"] = spec.tokens;
        s["target"] = spec.target;
        Json fibers = Json::array();
        for (const GameFiber& f : spec.fibers) {
            Json fj;
            fj["generator"] = f.generator.c;
            fj["point_count"] = f.point_count;
            fj["classes"] = f.classes;
            fj["weights"] = f.weights;
            fj["move2_cost"] = f.move2_cost;
            fibers.push_back(fj);
        }
        s["fibers"] = fibers;
        doc["spec"] = s;
        Json r;
        r["won"] = result.won;
        r["tokens_spent"] = result.tokens_spent;
        r["final_weights"] = result.final_weights;
        r["reason"] = result.reason;
        Json moves = Json::array();
        for (const GameMove& mv : result.transcript) {
            Json m;
            m["type"] = mv.type;
            m["fiber"] = mv.fiber;
            m["class"] = mv.cls;
            m["cost"] = mv.cost;
            m["from_index"] = mv.from_index;
            moves.push_back(m);
        }
        r["transcript"] = moves;
        r["winning_configs"] = result.winning_configs;
        doc["result"] = r;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "tokens: " << spec.tokens << "\n";
        std::cout << "target: " << spec.target << "\n";
        std::cout << "fibers: " << spec.fibers.size() << "\n";
        for (size_t i = 0; i < spec.fibers.size(); ++i) {
            const GameFiber& f = spec.fibers[i];
            std::cout << "fiber " << i << ": points " << f.point_count << ", classes "
                      << f.classes.size() << ", weights " << seq_str(f.weights) << "\n";
        }
        std::cout << "outcome: " << (result.won ? "won" : "lost") << "\n";
        std::cout << "tokens spent: " << result.tokens_spent << "\n";
        if (result.won) std::cout << "final weights: " << seq_str(result.final_weights) << "\n";
        if (!result.reason.empty()) std::cout << "reason: " << result.reason << "\n";
        std::cout << "moves:\n";
        for (const GameMove& mv : result.transcript) {
            if (mv.type == 1)
                std::cout << "  advance class " << mv.cls << " of fiber " << mv.fiber;
            else
                std::cout << "  advance fiber " << mv.fiber;
            std::cout << " from weight index " << mv.from_index << " (cost " << mv.cost << ")\n";
        }
    }
    return result.won ? 0 : 1;
}

int run_bouw_moller(long long N, long long M, const CommonFlags& flags) {
    BouwMollerData bm = bouw_moller(N, M, flags.bound);
    CertifyOptions options = flags.options();
    Certificate cert = certify_main2(bm.G, bm.sigma, bm.orbit_index, options);

    Json prologue;
    prologue["N"] = bm.N;
    prologue["M"] = bm.M;
    prologue["case"] = bm.case1 ? 1 : 2;
    prologue["L"] = bm.L;
    prologue["a"] = bm.a;
    prologue["b"] = bm.b;
    prologue["kernel size"] = bm.kernel_size;
    prologue["fiber size"] = bm.fiber_size;

    Loaded in{std::move(bm.G), std::move(bm.sigma), bm.orbit_index};
    return emit_certificate(in, options, cert, flags.format, &prologue);
}

int run_polygon(const std::vector<long long>& angles, const CommonFlags& flags) {
    PolygonData poly = dihedral_from_polygon(angles, flags.bound);
    IsotypicTable table = isotypic_table(poly.G, poly.sigma, flags.bound);
    DihedralConditions dc = dihedral_sufficient_conditions(poly.G, poly.sigma);
    std::vector<long long> reflected(poly.reflected.begin(), poly.reflected.end());

    if (flags.format == "json") {
        Json doc;
        doc["angles"] = poly.angles;
        doc["N"] = poly.N;
        doc["group_order"] = poly.G.order();
        doc["entries"] = poly.sigma.entries.size();
        doc["prefix_length"] = poly.sigma.ell;
        doc["reflected"] = reflected;
        doc["multiplicities"] = table.mult;
        doc["genus"] = table.genus;
        doc["condition1"] = dc.condition1;
        doc["condition2"] = dc.condition2;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "angles: " << seq_str(poly.angles) << "\n";
        std::cout << "N: " << poly.N << "\n";
        std::cout << "group order: " << poly.G.order() << "\n";
        std::cout << "entries: " << poly.sigma.entries.size() << "\n";
        std::cout << "prefix length: " << poly.sigma.ell << "\n";
        std::cout << "reflected: " << seq_str(reflected) << "\n";
        std::cout << "multiplicities by orbit: " << seq_str(table.mult) << "\n";
        std::cout << "genus: " << table.genus << "\n";
        std::cout << "sufficient condition 1: " << (dc.condition1 ? "holds" : "fails") << "\n";
        std::cout << "sufficient condition 2: " << (dc.condition2 ? "holds" : "fails") << "\n";
    }
    return 0;
}

int run_search(long long maxN, long long maxVertices, const CommonFlags& flags) {
    CertifyOptions options = flags.options();
    SearchResult res = search_dihedral(maxN, maxVertices, options);
    for (const SearchHit& hit : res.hits) {
        PolygonData poly = dihedral_from_polygon(hit.angles, options.bound);
        Json line;
        line["angles"] = hit.angles;
        line["N"] = hit.N;
        Json body = certificate_json(poly.G, poly.sigma, 1, options, hit.certificate);
        for (auto& [key, value] : body.items()) line[key] = value;
        std::cout << line.dump() << "\n";
    }
    std::cerr << "tuples seen: " << res.tuples_seen << "\n";
    std::cerr << "skipped (non-integral N): " << res.skipped_non_integral << "\n";
    std::cerr << "skipped (N too small): " << res.skipped_small_N << "\n";
    std::cerr << "skipped (not generating): " << res.skipped_not_generating << "\n";
    std::cerr << "resource limited: " << res.resource_limited << "\n";
    std::cerr << "certified: " << res.certified << "\n";
    std::cerr << "passed: " << res.passed << "\n";
    std::cerr << "distinct hits: " << res.hits.size() << "\n";
    return 0;
}

int run_tables(const CommonFlags& flags) {
    std::vector<TableReport> reports = reproduce_tables(flags.bound);
    if (flags.format == "json") {
        Json doc = Json::array();
        for (const TableReport& rep : reports) {
            Json r;
            r["label"] = rep.label;
            r["angles"] = rep.angles;
            r["N"] = rep.N;
            r["stratum"] = rep.stratum;
            r["residues"] = rep.residues;
            r["modulus"] = rep.modulus;
            r["rank"] = rep.rank;
            r["rel"] = rep.rel;
            r["assumed"] = rep.assumed;
            doc.push_back(r);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const TableReport& rep : reports) {
            std::cout << rep.label << ": N " << rep.N << ", stratum " << rep.stratum
                      << ", residues " << seq_str(rep.residues) << " mod " << rep.modulus
                      << ", rank " << rep.rank << ", rel " << rep.rel;
            if (rep.assumed) std::cout << ", assumed d1 = 0";
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certifier for invariant loci of symmetric abelian covers"};
    app.require_subcommand(1);

    CommonFlags certify_flags;
    std::string certify_input, certify_replay, certify_algorithm = "general";
    std::vector<long long> certify_polygon;
    long long certify_orbit = -1;
    auto* certify = app.add_subcommand("certify", "check the certificate conditions");
    certify->add_option("--input", certify_input, "JSON group and tuple file");
    certify->add_option("--polygon", certify_polygon, "angle numerators, comma separated")
        ->delimiter(',');
    certify->add_option("--replay", certify_replay, "re-verify a JSON certificate file");
    certify->add_option("--orbit", certify_orbit, "orbit index (default: from phi1_rep)");
    certify->add_option("--algorithm", certify_algorithm, "main or general")
        ->check(CLI::IsMember({"main", "general"}));
    certify->add_flag("--assume-d1-zero", certify_flags.assume_d1_zero,
                      "accept the dimension bound without an intersection witness");
    certify->add_flag("--minimize-move2-cost", certify_flags.minimize_move2_cost,
                      "price fiber moves with the cheapest orbit character");
    add_format(certify, certify_flags);
    add_bounds(certify, certify_flags);

    CommonFlags game_flags;
    std::string game_input;
    std::vector<long long> game_polygon;
    long long game_orbit = -1;
    auto* game = app.add_subcommand("game", "build and solve the vanishing game");
    game->add_option("--input", game_input, "JSON group and tuple file");
    game->add_option("--polygon", game_polygon, "angle numerators, comma separated")
        ->delimiter(',');
    game->add_option("--orbit", game_orbit, "orbit index (default: from phi1_rep)");
    game->add_flag("--minimize-move2-cost", game_flags.minimize_move2_cost,
                   "price fiber moves with the cheapest orbit character");
    add_format(game, game_flags);
    add_bounds(game, game_flags);

    CommonFlags bm_flags;
    bm_flags.assume_d1_zero = true;
    long long bm_N = 0, bm_M = 0;
    auto* bm = app.add_subcommand("bouw-moller", "construct and certify a grid cover");
    bm->add_option("N", bm_N, "first parameter")->required();
    bm->add_option("M", bm_M, "second parameter")->required();
    bm->add_flag("--assume-d1-zero,!--no-assume-d1-zero", bm_flags.assume_d1_zero,
                 "accept the dimension bound without an intersection witness (default on)");
    bm->add_flag("--minimize-move2-cost", bm_flags.minimize_move2_cost,
                 "price fiber moves with the cheapest orbit character");
    add_format(bm, bm_flags);
    add_bounds(bm, bm_flags);

    CommonFlags polygon_flags;
    std::vector<long long> polygon_angles;
    auto* polygon = app.add_subcommand("polygon", "unfold a rational polygon");
    polygon->add_option("angles", polygon_angles, "angle numerators, comma separated")
        ->required()
        ->delimiter(',');
    add_format(polygon, polygon_flags);
    add_bounds(polygon, polygon_flags);

    CommonFlags search_flags;
    long long search_maxN = 0, search_maxV = 0;
    auto* search = app.add_subcommand("search", "enumerate and certify polygon unfoldings");
    search->add_option("maxN", search_maxN, "largest angle denominator")->required();
    search->add_option("maxVertices", search_maxV, "largest vertex count")->required();
    search->add_flag("--minimize-move2-cost", search_flags.minimize_move2_cost,
                     "price fiber moves with the cheapest orbit character");
    add_bounds(search, search_flags);

    CommonFlags tables_flags;
    auto* tables = app.add_subcommand("tables", "recompute the reference tables");
    add_format(tables, tables_flags);
    add_bounds(tables, tables_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (certify->parsed())
            return run_certify(certify_input, certify_polygon, certify_replay, certify_orbit,
                               certify_algorithm, certify_flags);
        if (game->parsed()) return run_game(game_input, game_polygon, game_orbit, game_flags);
        if (bm->parsed()) return run_bouw_moller(bm_N, bm_M, bm_flags);
        if (polygon->parsed()) return run_polygon(polygon_angles, polygon_flags);
        if (search->parsed()) return run_search(search_maxN, search_maxV, search_flags);
        if (tables->parsed()) return run_tables(tables_flags);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
