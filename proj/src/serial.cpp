#include "occ/serial.hpp"

#include <algorithm>
#include <sstream>

#include "occ/errors.hpp"
#include "occ/hecke.hpp"

namespace occ {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string element_str(const GroupElement& x) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < x.c.size(); ++i) os << (i ? "," : "") << x.c[i];
    os << ')';
    return os.str();
}

std::string seq_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace

ParsedInput parse_input(const Json& doc, long long bound) {
    try {
        if (!doc.is_object()) throw InputError("input must be a JSON object");
        AbelianGroup A = make_group(doc.at("invariant_factors").get<std::vector<long long>>());
        std::vector<Automorphism> gens;
        for (const Json& m : doc.at("aut_generators"))
            gens.push_back(make_automorphism(A, m.get<std::vector<std::vector<long long>>>()));
        SemidirectGroup G = make_semidirect(A, gens, bound);

        GeneratingTuple sigma;
        for (const Json& e : doc.at("sigma")) {
            GroupElement a = reduce_element(A, e.at("a").get<std::vector<long long>>());
            const Json& hj = e.at("h");
            int h;
            if (hj.is_number_integer()) {
                long long idx = hj.get<long long>();
                if (idx < 0 || idx >= static_cast<long long>(G.H.size()))
                    throw InputError("h index out of range");
                h = static_cast<int>(idx);
            } else {
                h = G.index_of(make_automorphism(A, hj.get<std::vector<std::vector<long long>>>()));
            }
            sigma.entries.push_back({a, h});
        }
        sigma.ell = doc.at("ell").get<int>();
        validate_tuple(G, sigma, bound);

        ParsedInput out{std::move(G), std::move(sigma), std::nullopt};
        if (doc.contains("phi1_rep")) {
            Character chi =
                make_character(out.G.A, doc.at("phi1_rep").get<std::vector<long long>>());
            std::vector<CharacterOrbit> orbits = character_orbits(out.G, bound);
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                const auto& mem = orbits[i].members;
                if (std::find(mem.begin(), mem.end(), chi) != mem.end()) {
                    out.orbit_index = i;
                    break;
                }
            }
        }
        return out;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed input document: ") + e.what());
    }
}

Json input_json(const SemidirectGroup& G, const GeneratingTuple& sigma, std::size_t orbit_index,
                long long bound) {
    Json doc;
    doc["invariant_factors"] = G.A.factors;
    Json gens = Json::array();
    for (const Automorphism& h : G.H) gens.push_back(h.m);
    doc["aut_generators"] = gens;
    Json entries = Json::array();
    for (const GElement& x : sigma.entries) {
        Json e;
        e["a"] = x.a.c;
        e["h"] = G.H[x.h].m;
        entries.push_back(e);
    }
    doc["sigma"] = entries;
    doc["ell"] = sigma.ell;
    std::vector<CharacterOrbit> orbits = character_orbits(G, bound);
    if (orbit_index >= orbits.size()) throw InputError("orbit index out of range");
    doc["phi1_rep"] = orbits[orbit_index].members.front().d;
    return doc;
}

CertifyOptions parse_options(const Json& doc) {
    try {
        CertifyOptions options;
        options.assume_d1_zero = doc.value("assume_d1_zero", options.assume_d1_zero);
        options.minimize_move2_cost = doc.value("minimize_move2_cost", options.minimize_move2_cost);
        options.bound = doc.value("bound", options.bound);
        options.precision_cap = doc.value("precision_cap", options.precision_cap);
        options.state_cap = doc.value("state_cap", options.state_cap);
        return options;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed options: ") + e.what());
    }
}

Json options_json(const CertifyOptions& options) {
    Json doc;
    doc["assume_d1_zero"] = options.assume_d1_zero;
    doc["minimize_move2_cost"] = options.minimize_move2_cost;
    doc["bound"] = options.bound;
    doc["precision_cap"] = options.precision_cap;
    doc["state_cap"] = options.state_cap;
    return doc;
}

std::string cyclo_exact(const Cyclotomic& x) {
    if (auto q = as_rational(x)) return rational_str(*q);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < x.c.size(); ++k) {
        const Rational& r = x.c[k];
        if (r == 0) continue;
        bool negative = r < 0;
        Rational mag = negative ? Rational(-r) : r;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << '*';
            os << 'z' << x.e;
            if (k > 1) os << '^' << k;
        }
    }
    return first ? "0" : os.str();
}

std::string cyclo_report(const Cyclotomic& x) {
    return cyclo_exact(x) + " ~ " + cyclo_decimal(x) + " (approximate)";
}

Json cyclotomic_json(const Cyclotomic& x) {
    Json doc;
    doc["order"] = x.e;
    Json coeffs = Json::array();
    for (const Rational& r : x.c) coeffs.push_back(rational_str(r));
    doc["coefficients"] = coeffs;
    doc["exact"] = cyclo_exact(x);
    doc["approximate_decimal"] = cyclo_decimal(x);
    return doc;
}

Json certificate_json(const SemidirectGroup& G, const GeneratingTuple& sigma,
                      std::size_t orbit_index, const CertifyOptions& options,
                      const Certificate& cert) {
    Json doc;
    doc["input"] = input_json(G, sigma, orbit_index, options.bound);
    doc["options"] = options_json(options);

    Json c;
    c["algorithm"] = cert.algorithm;
    c["passed"] = cert.passed;
    c["route"] = cert.route;
    c["rank"] = cert.rank;
    c["rel"] = cert.rel;
    c["genus"] = cert.genus;
    c["tokens"] = cert.tokens;
    c["tokens_spent"] = cert.tokens_spent;
    c["kappa"] = cert.kappa;
    c["fiber_sizes"] = cert.fiber_sizes;
    c["stratum"] = stratum_string(cert.stratum);
    Json orders = Json::array();
    for (const auto& [order, count] : cert.stratum.orders)
        orders.push_back(Json::array({order, count}));
    c["stratum_orders"] = orders;
    c["field_degree"] = cert.field_degree;
    c["assumptions"] = cert.assumptions;

    Json conds = Json::array();
    for (const Condition& cd : cert.conditions) {
        Json j;
        j["name"] = cd.name;
        j["passed"] = cd.passed;
        j["required"] = cd.required;
        j["detail"] = cd.detail;
        conds.push_back(j);
    }
    c["conditions"] = conds;

    c["witness"] = cert.witness ? Json(cert.witness->c) : Json(nullptr);
    c["witness_sum"] = cert.witness_sum ? cyclotomic_json(*cert.witness_sum) : Json(nullptr);
    Json merged = Json::array();
    for (const GroupElement& x : cert.merged) merged.push_back(x.c);
    c["merged"] = merged;
    if (cert.partition) {
        Json p;
        p["chi"] = cert.partition->chi.d;
        p["multiplicity"] = cert.partition->m_chi;
        p["parts"] = cert.partition->parts;
        c["partition"] = p;
    } else {
        c["partition"] = nullptr;
    }

    Json g;
    g["won"] = cert.game.won;
    g["tokens_spent"] = cert.game.tokens_spent;
    g["final_weights"] = cert.game.final_weights;
    g["reason"] = cert.game.reason;
    Json moves = Json::array();
    for (const GameMove& mv : cert.game.transcript) {
        Json m;
        m["type"] = mv.type;
        m["fiber"] = mv.fiber;
        m["class"] = mv.cls;
        m["cost"] = mv.cost;
        m["from_index"] = mv.from_index;
        moves.push_back(m);
    }
    g["transcript"] = moves;
    g["winning_configs"] = cert.game.winning_configs;
    c["game"] = g;

    doc["certificate"] = c;
    return doc;
}

std::string certificate_text(const Certificate& cert) {
    std::ostringstream os;
    os << "algorithm: " << cert.algorithm << "\n";
    os << "verdict: " << (cert.passed ? "PASS" : "FAIL") << "\n";
    os << "route: " << cert.route << "\n";
    os << "rank: " << cert.rank << "\n";
    os << "rel: " << cert.rel << "\n";
    os << "genus: " << cert.genus << "\n";
    os << "stratum: " << stratum_string(cert.stratum) << "\n";
    os << "field degree: " << cert.field_degree << "\n";
    os << "tokens: " << cert.tokens_spent << " spent of " << cert.tokens << "\n";
    os << "kappa: " << seq_str(cert.kappa) << "\n";
    os << "fiber sizes: " << seq_str(cert.fiber_sizes) << "\n";
    if (cert.witness && cert.witness_sum)
        os << "witness: a = " << element_str(*cert.witness)
           << ", sum = " << cyclo_report(*cert.witness_sum) << "\n";
    else
        os << "witness: none\n";
    if (!cert.assumptions.empty()) {
        os << "assumptions:\n";
        for (const std::string& s : cert.assumptions) os << "  - " << s << "\n";
    }
    os << "conditions:\n";
    for (const Condition& c : cert.conditions)
        os << "  [" << (c.passed ? "pass" : (c.required ? "FAIL" : "fail, waived")) << "] "
           << c.name << ": " << c.detail << "\n";
    return os.str();
}

ReplayOutcome replay_certificate(const Json& doc) {
    try {
        CertifyOptions options = parse_options(doc.value("options", Json::object()));
        ParsedInput parsed = parse_input(doc.at("input"), options.bound);
        if (!parsed.orbit_index) throw InputError("certificate input lacks phi1_rep");
        const Json& stored = doc.at("certificate");
        std::string algorithm = stored.at("algorithm").get<std::string>();

        ReplayOutcome out;
        out.fresh = algorithm == "main"
                        ? certify_main2(parsed.G, parsed.sigma, *parsed.orbit_index, options)
                        : certify_algorithm2(parsed.G, parsed.sigma, *parsed.orbit_index, options);
        out.stored_passed = stored.at("passed").get<bool>();

        auto check = [&](const std::string& field, const std::string& got,
                         const std::string& want) {
            if (got != want)
                out.mismatches.push_back(field + ": stored " + want + ", recomputed " + got);
        };
        check("passed", out.fresh.passed ? "true" : "false",
              out.stored_passed ? "true" : "false");
        check("route", out.fresh.route, stored.at("route").get<std::string>());
        check("rank", std::to_string(out.fresh.rank),
              std::to_string(stored.at("rank").get<long long>()));
        check("rel", std::to_string(out.fresh.rel),
              std::to_string(stored.at("rel").get<long long>()));
        check("genus", std::to_string(out.fresh.genus),
              std::to_string(stored.at("genus").get<long long>()));
        check("stratum", stratum_string(out.fresh.stratum),
              stored.at("stratum").get<std::string>());
        check("field_degree", std::to_string(out.fresh.field_degree),
              std::to_string(stored.at("field_degree").get<long long>()));
        return out;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed certificate document: ") + e.what());
    }
}

}  // namespace occ
