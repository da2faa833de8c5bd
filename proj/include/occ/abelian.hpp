#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <vector>

namespace occ {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Finite abelian group in invariant-factor form: Z/n1 x ... x Z/nk with
// n1 | n2 | ... | nk.  Elements are coordinate vectors, coordinate i taken
// mod factors[i].  The trivial group is {1}.
struct AbelianGroup {
    std::vector<long long> factors;

    long long order() const;
    long long exponent() const { return factors.back(); }
    int rank() const { return static_cast<int>(factors.size()); }
    bool operator==(const AbelianGroup&) const = default;
};

// Validates positivity and the divisibility chain.
AbelianGroup make_group(std::vector<long long> factors);

struct GroupElement {
    std::vector<long long> c;
    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

GroupElement reduce_element(const AbelianGroup& A, std::vector<long long> c);
GroupElement zero_element(const AbelianGroup& A);
bool is_zero(const GroupElement& x);
GroupElement add(const AbelianGroup& A, const GroupElement& x, const GroupElement& y);
GroupElement neg(const AbelianGroup& A, const GroupElement& x);
GroupElement sub(const AbelianGroup& A, const GroupElement& x, const GroupElement& y);
GroupElement scalar_mul(const AbelianGroup& A, long long t, const GroupElement& x);
long long element_order(const AbelianGroup& A, const GroupElement& x);

// Position of x in the lexicographic (odometer) enumeration of A.
long long element_index(const AbelianGroup& A, const GroupElement& x);
GroupElement element_at(const AbelianGroup& A, long long index);
// Throws LimitError if |A| > bound.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& A, long long bound);

// Automorphism as an integer matrix acting on column vectors from the left.
// Entry m[i][j] is stored reduced mod factors[i]; two matrices define the same
// map iff their reduced forms coincide.
struct Automorphism {
    std::vector<std::vector<long long>> m;
    bool operator==(const Automorphism&) const = default;
    auto operator<=>(const Automorphism&) const = default;
};

// Checks shape, well-definedness (n_j * m[i][j] = 0 mod n_i) and bijectivity
// (cokernel of [M | diag(n)] trivial).
Automorphism make_automorphism(const AbelianGroup& A, const std::vector<std::vector<long long>>& m);
Automorphism identity_automorphism(const AbelianGroup& A);
GroupElement apply(const AbelianGroup& A, const Automorphism& f, const GroupElement& x);
// compose(f, g) = f after g.
Automorphism compose(const AbelianGroup& A, const Automorphism& f, const Automorphism& g);

// Character of A: x -> zeta_e^t with e = exponent(A) and
// t = sum_i (e / n_i) * d[i] * x[i] mod e.  d[i] is stored mod n_i.
struct Character {
    std::vector<long long> d;
    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;
};

Character make_character(const AbelianGroup& A, std::vector<long long> d);
long long character_exponent(const AbelianGroup& A, const Character& chi, const GroupElement& x);
Character conj_character(const AbelianGroup& A, const Character& chi);
// Dual action: (chi o f)(x) = chi(f(x)).  Exact divisibility of the dual
// coordinates is asserted.
Character character_after(const AbelianGroup& A, const Character& chi, const Automorphism& f);
bool is_trivial_character(const Character& chi);
std::vector<Character> all_characters(const AbelianGroup& A, long long bound);

// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
// nonnegative, d1 | d2 | ... .
struct SmithResult {
    std::vector<std::vector<Int>> U, D, V;
};
SmithResult smith_normal_form(const std::vector<std::vector<Int>>& M);

// Exact inverse of a square integer matrix; nullopt when the inverse is not
// integral (or the matrix is singular).
std::optional<std::vector<std::vector<Int>>> integer_inverse(const std::vector<std::vector<Int>>& M);
Rational rational_determinant(const std::vector<std::vector<Int>>& M);

struct SubgroupPresentation {
    std::vector<GroupElement> gens;
};

// Closure of the generators; sorted.  Throws LimitError past bound.
std::vector<GroupElement> subgroup_elements(const AbelianGroup& A, const SubgroupPresentation& K, long long bound);

// Quotient A/K in invariant-factor form together with the projection, realized
// as x -> (U x mod d_i) on the rows where d_i > 1.
struct QuotientData {
    AbelianGroup src;
    AbelianGroup q;
    std::vector<std::vector<Int>> U, U_inv;
    std::vector<int> kept;

    GroupElement project(const GroupElement& x) const;
};
QuotientData quotient(const AbelianGroup& A, const SubgroupPresentation& K, long long bound);

// Automorphism of A/K induced by f, via U f U^-1 restricted to the kept
// coordinates.  Requires f(K) = K (otherwise InputError).
Automorphism induced_automorphism(const QuotientData& Q, const Automorphism& f,
                                  const std::vector<GroupElement>& K_elements);

}  // namespace occ
