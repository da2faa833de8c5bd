#pragma once

#include <map>
#include <vector>

#include "occ/abelian.hpp"

namespace occ {

// G = A x| H for a finite abelian A and a group H of automorphisms of A.
// H is closed under composition, H[0] is the identity, and the element
// (a, h) acts on A by x -> a + h(x); multiplication follows that action:
// (a1, h1)(a2, h2) = (a1 + h1(a2), h1 h2).
struct SemidirectGroup {
    AbelianGroup A;
    std::vector<Automorphism> H;
    std::vector<std::vector<int>> hmul;
    std::vector<int> hinv;
    std::map<Automorphism, int> h_index;

    long long order() const { return A.order() * static_cast<long long>(H.size()); }
    int index_of(const Automorphism& h) const;
};

// Closes the generators; throws LimitError when |H| would exceed bound.
SemidirectGroup make_semidirect(const AbelianGroup& A, const std::vector<Automorphism>& h_gens,
                                long long bound);

struct GElement {
    GroupElement a;
    int h = 0;
    bool operator==(const GElement&) const = default;
    auto operator<=>(const GElement&) const = default;
};

GElement g_identity(const SemidirectGroup& G);
bool g_is_identity(const GElement& x);
GElement g_mul(const SemidirectGroup& G, const GElement& x, const GElement& y);
GElement g_inv(const SemidirectGroup& G, const GElement& x);
long long g_order(const SemidirectGroup& G, const GElement& x);

GroupElement affine_apply(const SemidirectGroup& G, const GElement& g, const GroupElement& x);
// Orbit count of x -> g.a + h(x) on A.
long long affine_cycle_count(const SemidirectGroup& G, const GElement& g, long long bound);

// Tuple of group elements with identity product whose first ell entries lie
// in A (possibly trivially) and whose later entries do not.
struct GeneratingTuple {
    std::vector<GElement> entries;
    int ell = 0;
};

// Identity product, prefix shape, and generation of all of G; InputError
// otherwise.
void validate_tuple(const SemidirectGroup& G, const GeneratingTuple& sigma, long long bound);

// Moves base-group entries to the front by braid moves (x, y) -> (y, y^-1 x y),
// preserving the product; ell is set to the count of base-group entries.
GeneratingTuple normalize_tuple(const SemidirectGroup& G, const std::vector<GElement>& entries);

// A' = elements of A fixed by every h in H; sorted.
std::vector<GroupElement> fixed_subgroup(const SemidirectGroup& G, long long bound);

}  // namespace occ
