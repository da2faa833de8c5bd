#pragma once

#include <string>
#include <vector>

#include "occ/certify.hpp"

namespace occ {

// One Bouw-Moller instance: the covering datum whose quotient carries the
// grid-graph flat structure with parameters (N, M).
struct BouwMollerData {
    long long N = 0, M = 0;
    long long gamma = 0, n = 0, m = 0;
    bool case1 = false;  // N, M both even with N/gamma, M/gamma both odd
    long long L = 0, a = 0, b = 0;
    long long kernel_size = 0;
    long long fiber_size = 0;  // points over the distinguished vertex
    long long genus = 0;
    StratumSignature stratum;
    SemidirectGroup G;
    GeneratingTuple sigma;
    std::size_t orbit_index = 0;  // orbit of the descended weight character
};

// Builds the group, tuple, and distinguished orbit for parameters
// 2 <= M <= N.  Throws InputError when the parameters are out of range or
// the zero set degenerates (a <= 1).
BouwMollerData bouw_moller(long long N, long long M, long long bound = 1000000);

// Unfolding datum of a rational polygon with angle vector pi * a_i / N.
struct PolygonData {
    std::vector<long long> angles;
    long long N = 0;
    SemidirectGroup G;
    GeneratingTuple sigma;
    // reflected[i] records whether vertex i contributed a reflection pair.
    std::vector<bool> reflected;
};

// Angles must be positive, nondecreasing, and at least three; their sum must
// be divisible by m - 2.  Vertices with a_i = 1 (or a_i = 2 when N is even)
// unfold through a reflection pair, the rest map to rotations.
PolygonData dihedral_from_polygon(const std::vector<long long>& angles,
                                  long long bound = 1000000);

// Multiplicity of the k-th two-dimensional orbit computed from the entry
// shapes alone, without averaging characters.  Requires a dihedral group and
// 1 <= k <= N/2 with 2k not divisible by N.
long long dihedral_mk_fast(const SemidirectGroup& G, const GeneratingTuple& sigma, long long k);

// Two closed-form criteria, either of which forces the intersection sum at
// a rotation generator to exceed 2.
struct DihedralConditions {
    bool condition1 = false;  // N > 4, N != 6, and m_k >= 4 for all k coprime to N
    bool condition2 = false;  // N > 8, N != 10, and m_k >= 2 for all k coprime to N
};

DihedralConditions dihedral_sufficient_conditions(const SemidirectGroup& G,
                                                  const GeneratingTuple& sigma);

// One row of the reference tables, recomputed from scratch.
struct TableReport {
    std::string label;
    std::vector<long long> angles;
    long long N = 0;
    std::string stratum;
    std::vector<long long> residues;
    long long modulus = 0;
    long long rank = 0;
    long long rel = 0;
    bool assumed = false;  // verdict needed the d1 = 0 assumption
};

// Recomputes every reference row and cross-checks it against the stored
// values, throwing InternalError on any mismatch.
std::vector<TableReport> reproduce_tables(long long bound = 1000000);

struct SearchHit {
    std::vector<long long> angles;
    long long N = 0;
    Certificate certificate;
};

struct SearchResult {
    long long tuples_seen = 0;
    long long skipped_non_integral = 0;
    long long skipped_small_N = 0;
    long long skipped_not_generating = 0;
    long long resource_limited = 0;
    long long certified = 0;
    long long passed = 0;
    // Passing instances in enumeration order, deduplicated by
    // (N, stratum, rank, rel, field degree).
    std::vector<SearchHit> hits;
};

// Enumerates nondecreasing angle vectors with at most maxVertices entries
// and N <= maxN, certifying each unfolding without assumptions.
SearchResult search_dihedral(long long maxN, long long maxVertices,
                             const CertifyOptions& options = {});

}  // namespace occ
