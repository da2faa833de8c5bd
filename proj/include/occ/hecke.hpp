#pragma once

#include <vector>

#include "occ/cyclotomic.hpp"
#include "occ/semidirect.hpp"

namespace occ {

// Orbit of characters of A under chi -> chi o h^-1 for h in H.  Members are
// sorted; the orbit list is sorted by smallest member, so the orbit of the
// trivial character always comes first.
struct CharacterOrbit {
    std::vector<Character> members;
    bool is_trivial = false;
    bool conj_closed = false;
};

std::vector<CharacterOrbit> character_orbits(const SemidirectGroup& G, long long bound);

// Action of a group element on the span of an orbit, in the character basis:
// basis vector j maps to zeta_e^scalar_exp[j] times basis vector perm[j],
// where e is the exponent of A.
struct MonomialAction {
    long long e = 1;
    std::vector<int> perm;
    std::vector<long long> scalar_exp;
};

MonomialAction monomial_action(const SemidirectGroup& G, const CharacterOrbit& orbit,
                               const GElement& g);

// Dimension of the subspace of the orbit span fixed by g: the number of
// permutation cycles whose scalar product is 1.
long long fix_dim(const SemidirectGroup& G, const CharacterOrbit& orbit, const GElement& g);

// Multiplicity of the orbit's representation in degree-one cohomology of the
// regular cover with monodromy sigma.  The trivial orbit reports 0.
long long multiplicity(const SemidirectGroup& G, const CharacterOrbit& orbit,
                       const GeneratingTuple& sigma);

// Sum of fixed dimensions over the base-group prefix of sigma.
long long rel_count(const SemidirectGroup& G, const CharacterOrbit& orbit,
                    const GeneratingTuple& sigma);

// Genus from representation multiplicities: twice the genus is their sum.
long long genus_from_multiplicities(const std::vector<long long>& mult);

// Genus of the same cover by Riemann-Hurwitz over the sphere, using affine
// orbit counts of the entries of sigma.  Kept independent of the
// multiplicity route on purpose.
long long genus_riemann_hurwitz(const SemidirectGroup& G, const GeneratingTuple& sigma,
                                long long bound);

// Orbit decomposition with multiplicities for a fixed tuple.  Construction
// checks that orbit sizes partition the dual group and that both genus
// computations agree.
struct IsotypicTable {
    std::vector<CharacterOrbit> orbits;
    std::vector<long long> mult;
    long long genus = 0;
};

IsotypicTable isotypic_table(const SemidirectGroup& G, const GeneratingTuple& sigma,
                             long long bound);

// First count nonnegative integers d with zeta_{|a|}^(d+1) = chi(a) for some
// chi in the orbit, ascending.
std::vector<long long> lambda_sequence(const SemidirectGroup& G, const CharacterOrbit& orbit,
                                       const GroupElement& a, int count);

// The residues modulo |a| of the valid weights, sorted.
std::vector<long long> lambda_residues(const SemidirectGroup& G, const CharacterOrbit& orbit,
                                       const GroupElement& a);

// Average of chi(a) over the orbit.
Cyclotomic hecke_eigenvalue(const SemidirectGroup& G, const CharacterOrbit& orbit,
                            const GroupElement& a);

// Number of h in H with h(a) = a.
long long stabilizer_size(const SemidirectGroup& G, const GroupElement& a);

// sum_j mult_j |eigenvalue_j(a)|^2, exact.
Cyclotomic intersection_sum(const SemidirectGroup& G, const IsotypicTable& table,
                            const GroupElement& a);

// (|H| / stabilizer)^2 * (2 - intersection_sum(a)).
Cyclotomic self_intersection(const SemidirectGroup& G, const IsotypicTable& table,
                             const GroupElement& a);

// Field generated by the orbit's character sums, one generator per element
// of A.  The degree is cross-checked against the permutation action of the
// Galois group on the orbit.
struct FieldOfDefinition {
    long long degree = 1;
    std::vector<Cyclotomic> generators;
};

FieldOfDefinition field_of_definition(const SemidirectGroup& G, const CharacterOrbit& orbit);

}  // namespace occ
