#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occ/game.hpp"

namespace occ {

struct CertifyOptions {
    // Accept the dimension bound without an intersection witness or a merge.
    bool assume_d1_zero = false;
    bool minimize_move2_cost = false;
    long long bound = 1000000;
    long long precision_cap = default_precision_cap;
    long long state_cap = 2000000;
};

// One named check.  required == false marks checks that are evaluated for the
// report but do not gate the verdict on the chosen route.
struct Condition {
    std::string name;
    bool passed = false;
    bool required = true;
    std::string detail;
};

// Vanishing orders with multiplicities, descending by order.  Order zero
// entries are marked points and are kept.
struct StratumSignature {
    std::vector<std::pair<long long, long long>> orders;
    bool operator==(const StratumSignature&) const = default;
};

StratumSignature stratum_from_weights(const std::vector<long long>& kappa,
                                      const std::vector<long long>& fiber_sizes);
// "H(6)", "H(2^3)", "H(4, 0^6)".
std::string stratum_string(const StratumSignature& s);

// Consecutive pairs of the tail merged into single base-group entries, the
// prefix kept as is.  InputError when the tail has odd length, a pair product
// leaves the base group, or the merged entries fail to generate it.
struct MergeResult {
    std::vector<GroupElement> entries;
    long long n_comb = 0;   // entries that are products of two originals
    long long d1_bound = 0; // n - |entries| - n_comb
};
MergeResult default_merge(const SemidirectGroup& G, const GeneratingTuple& sigma);

// Multiplicity of chi in the holomorphic part of the cover with abelian
// monodromy sigma_prime (Chevalley-Weil).  The trivial character reports 0.
long long chevalley_weil_mult(const AbelianGroup& A,
                              const std::vector<GroupElement>& sigma_prime,
                              const Character& chi);

// A character of the orbit together with a distribution of its zeroes over
// the first ell entries meeting the required vanishing orders.
struct PartitionWitness {
    Character chi;
    long long m_chi = 0;
    std::vector<long long> parts;
};
// Searches the orbit for a character admitting a composition
// (o_1, ..., o_ell) of m_chi - 1 with o_i |a_i| + n_i - 1 >= kappa_i, where
// n_i is the least positive exponent with chi(a_i) = zeta^(n_i).
std::optional<PartitionWitness> partition_check(const AbelianGroup& A,
                                               const std::vector<GroupElement>& merged,
                                               int ell, const std::vector<long long>& kappa,
                                               const CharacterOrbit& orbit);

struct Certificate {
    bool passed = false;
    std::string algorithm; // "main" or "general"
    std::string route;     // "direct" or "merge"
    std::vector<Condition> conditions;
    std::vector<std::string> assumptions;
    long long rank = 0;
    long long rel = 0;
    long long genus = 0;
    long long tokens = 0;
    long long tokens_spent = 0;
    std::vector<long long> kappa;
    std::vector<long long> fiber_sizes;
    StratumSignature stratum;
    long long field_degree = 1;
    std::optional<GroupElement> witness;
    std::optional<Cyclotomic> witness_sum;
    std::vector<GroupElement> merged;
    std::optional<PartitionWitness> partition;
    GameResult game;
};

// Direct certificate: conjugation-closed orbit, nonzero multiplicity, zero
// token budget, an intersection witness and the total vanishing identity.
// assume_d1_zero waives the witness requirement and records the assumption.
Certificate certify_main2(const SemidirectGroup& G, const GeneratingTuple& sigma,
                          size_t orbit_index, const CertifyOptions& options = {});

// General certificate: plays the vanishing game, then either closes directly
// (zero budget, won at the start) or through a merge with genus equality and
// an eigenform vanishing to the final weights.  assume_d1_zero replaces the
// intersection witness and the merge bound; the assumption is recorded.
Certificate certify_algorithm2(const SemidirectGroup& G, const GeneratingTuple& sigma,
                               size_t orbit_index, const CertifyOptions& options = {});

}  // namespace occ
