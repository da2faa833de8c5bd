#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "occ/certify.hpp"

namespace occ {

using Json = nlohmann::ordered_json;

// Group and tuple decoded from the published input schema:
// {"invariant_factors": [n1, ...], "aut_generators": [matrix, ...],
//  "sigma": [{"a": [...], "h": index-or-matrix}, ...], "ell": k,
//  "phi1_rep": [dual coords]}.  H is the closure of aut_generators.
struct ParsedInput {
    SemidirectGroup G;
    GeneratingTuple sigma;
    // Index of the orbit containing the phi1_rep character, when given.
    std::optional<std::size_t> orbit_index;
};

ParsedInput parse_input(const Json& doc, long long bound);
Json input_json(const SemidirectGroup& G, const GeneratingTuple& sigma, std::size_t orbit_index,
                long long bound);

CertifyOptions parse_options(const Json& doc);
Json options_json(const CertifyOptions& options);

// Exact rendering as a polynomial in z<e> = zeta_e ("2", "z5 + z5^4", ...).
std::string cyclo_exact(const Cyclotomic& x);
// "<exact> ~ <decimal> (approximate)" with 15 significant digits.
std::string cyclo_report(const Cyclotomic& x);
Json cyclotomic_json(const Cyclotomic& x);

// Self-contained document: {"input": ..., "options": ..., "certificate": ...}.
Json certificate_json(const SemidirectGroup& G, const GeneratingTuple& sigma,
                      std::size_t orbit_index, const CertifyOptions& options,
                      const Certificate& cert);
std::string certificate_text(const Certificate& cert);

// Rebuilds the embedded input, reruns the stored algorithm with the stored
// options, and compares the stored verdict and invariants field by field.
struct ReplayOutcome {
    bool stored_passed = false;
    Certificate fresh;
    std::vector<std::string> mismatches;  // empty iff the document replays
};
ReplayOutcome replay_certificate(const Json& doc);

}  // namespace occ
