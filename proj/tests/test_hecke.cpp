#include "doctest.h"

#include <set>

#include "occ/errors.hpp"
#include "occ/hecke.hpp"

using namespace occ;

namespace {

constexpr long long B = 1000000;

SemidirectGroup dihedral(long long N) {
    AbelianGroup A = make_group({N});
    return make_semidirect(A, {make_automorphism(A, {{-1}})}, B);
}

GElement rot(const SemidirectGroup& G, long long k) {
    return GElement{reduce_element(G.A, {k}), 0};
}

GElement refl(const SemidirectGroup& G, long long k) {
    return GElement{reduce_element(G.A, {k}), 1};
}

Character chi(const SemidirectGroup& G, long long d) { return make_character(G.A, {d}); }

// Unfolding tuple of the (1,1,1,7) quadrilateral: three corners contribute
// reflection pairs, the 7 pi / 5 corner contributes r^7 = r^2.
GeneratingTuple quad_1117(const SemidirectGroup& D5) {
    std::vector<GElement> raw = {refl(D5, 1), refl(D5, 0), refl(D5, 1), refl(D5, 0),
                                 refl(D5, 1), refl(D5, 0), rot(D5, 7)};
    GeneratingTuple sigma = normalize_tuple(D5, raw);
    validate_tuple(D5, sigma, B);
    return sigma;
}

// Unfolding tuple of the (1,1,2,8) quadrilateral over D6.
GeneratingTuple quad_1128(const SemidirectGroup& D6) {
    std::vector<GElement> raw = {refl(D6, 1), refl(D6, 0), refl(D6, 1), refl(D6, 0),
                                 refl(D6, 2), refl(D6, 0), rot(D6, 8)};
    GeneratingTuple sigma = normalize_tuple(D6, raw);
    validate_tuple(D6, sigma, B);
    return sigma;
}

// Unfolding tuple of the (1,1,2,2,12) pentagon over D6; the 12 pi / 6 corner
// contributes the identity, so the base prefix is an identity entry.
GeneratingTuple pent_112212(const SemidirectGroup& D6) {
    std::vector<GElement> raw = {refl(D6, 1), refl(D6, 0), refl(D6, 1), refl(D6, 0),
                                 refl(D6, 2), refl(D6, 0), refl(D6, 2), refl(D6, 0),
                                 rot(D6, 12)};
    GeneratingTuple sigma = normalize_tuple(D6, raw);
    validate_tuple(D6, sigma, B);
    return sigma;
}

Cyclotomic monomial_trace(const MonomialAction& M) {
    Cyclotomic t = cyclo_zero();
    for (size_t j = 0; j < M.perm.size(); ++j)
        if (M.perm[j] == static_cast<int>(j))
            t = cyclo_add(t, cyclo_root(M.e, M.scalar_exp[j]));
    return t;
}

// Independent of fix_dim: average the monomial trace over the cyclic group
// generated by g.
Cyclotomic averaged_trace(const SemidirectGroup& G, const CharacterOrbit& orbit,
                          const GElement& g) {
    long long n = g_order(G, g);
    Cyclotomic total = cyclo_zero();
    GElement p = g_identity(G);
    for (long long k = 0; k < n; ++k) {
        total = cyclo_add(total, monomial_trace(monomial_action(G, orbit, p)));
        p = g_mul(G, p, g);
    }
    return cyclo_scale(Rational(1, n), total);
}

std::vector<GElement> all_elements(const SemidirectGroup& G) {
    std::vector<GElement> out;
    for (const GroupElement& a : enumerate_elements(G.A, B))
        for (size_t h = 0; h < G.H.size(); ++h) out.push_back({a, static_cast<int>(h)});
    return out;
}

}  // namespace

TEST_CASE("character orbits of dihedral groups") {
    SemidirectGroup D5 = dihedral(5);
    auto orbits = character_orbits(D5, B);
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].is_trivial);
    CHECK(orbits[0].conj_closed);
    CHECK(orbits[0].members == std::vector<Character>{chi(D5, 0)});
    CHECK(orbits[1].members == std::vector<Character>{chi(D5, 1), chi(D5, 4)});
    CHECK(orbits[2].members == std::vector<Character>{chi(D5, 2), chi(D5, 3)});
    CHECK(!orbits[1].is_trivial);
    CHECK(orbits[1].conj_closed);
    CHECK(orbits[2].conj_closed);

    SemidirectGroup D6 = dihedral(6);
    auto orb6 = character_orbits(D6, B);
    REQUIRE(orb6.size() == 4);
    CHECK(orb6[1].members == std::vector<Character>{chi(D6, 1), chi(D6, 5)});
    CHECK(orb6[2].members == std::vector<Character>{chi(D6, 2), chi(D6, 4)});
    CHECK(orb6[3].members == std::vector<Character>{chi(D6, 3)});
    CHECK(orb6[3].conj_closed);
    CHECK(!orb6[3].is_trivial);
}

TEST_CASE("orbits under a trivial automorphism group are singletons") {
    AbelianGroup A = make_group({5});
    SemidirectGroup G = make_semidirect(A, {}, B);
    auto orbits = character_orbits(G, B);
    REQUIRE(orbits.size() == 5);
    for (size_t j = 0; j < orbits.size(); ++j) {
        CHECK(orbits[j].members.size() == 1);
        CHECK(orbits[j].is_trivial == (j == 0));
        // Only the trivial character is self-conjugate in Z/5.
        CHECK(orbits[j].conj_closed == (j == 0));
    }
}

TEST_CASE("orbit sizes partition the dual group") {
    AbelianGroup A = make_group({4, 8});
    SemidirectGroup G = make_semidirect(A, {make_automorphism(A, {{-1, 0}, {0, -1}})}, B);
    auto orbits = character_orbits(G, B);
    // Pairs {chi, -chi} with four self-paired two-torsion characters.
    CHECK(orbits.size() == 18);
    long long total = 0;
    for (const auto& orb : orbits) {
        total += static_cast<long long>(orb.members.size());
        CHECK(orb.conj_closed);
    }
    CHECK(total == 32);
}

TEST_CASE("monomial action on a dihedral orbit") {
    SemidirectGroup D5 = dihedral(5);
    auto orbits = character_orbits(D5, B);
    const CharacterOrbit& phi1 = orbits[1];

    MonomialAction Mr = monomial_action(D5, phi1, rot(D5, 1));
    CHECK(Mr.e == 5);
    CHECK(Mr.perm == std::vector<int>{0, 1});
    CHECK(Mr.scalar_exp == std::vector<long long>{4, 1});

    MonomialAction Mt = monomial_action(D5, phi1, refl(D5, 0));
    CHECK(Mt.perm == std::vector<int>{1, 0});
    CHECK(Mt.scalar_exp == std::vector<long long>{0, 0});

    MonomialAction Ms = monomial_action(D5, phi1, refl(D5, 1));
    CHECK(Ms.perm == std::vector<int>{1, 0});
    CHECK(Ms.scalar_exp == std::vector<long long>{1, 4});
}

TEST_CASE("monomial action is a homomorphism") {
    SemidirectGroup D5 = dihedral(5);
    auto orbits = character_orbits(D5, B);
    auto elements = all_elements(D5);
    for (const CharacterOrbit& orb : {orbits[1], orbits[2]}) {
        for (const GElement& x : elements) {
            MonomialAction Mx = monomial_action(D5, orb, x);
            for (const GElement& y : elements) {
                MonomialAction My = monomial_action(D5, orb, y);
                MonomialAction Mxy = monomial_action(D5, orb, g_mul(D5, x, y));
                for (size_t j = 0; j < Mxy.perm.size(); ++j) {
                    CHECK(Mxy.perm[j] == Mx.perm[My.perm[j]]);
                    long long e = (My.scalar_exp[j] + Mx.scalar_exp[My.perm[j]]) % Mxy.e;
                    CHECK(Mxy.scalar_exp[j] == e);
                }
            }
        }
    }
}

TEST_CASE("fixed dimensions") {
    SemidirectGroup D5 = dihedral(5);
    auto orbits = character_orbits(D5, B);
    const CharacterOrbit& phi1 = orbits[1];
    CHECK(fix_dim(D5, phi1, g_identity(D5)) == 2);
    CHECK(fix_dim(D5, phi1, rot(D5, 1)) == 0);
    for (long long k = 0; k < 5; ++k) CHECK(fix_dim(D5, phi1, refl(D5, k)) == 1);

    SemidirectGroup D6 = dihedral(6);
    auto orb6 = character_orbits(D6, B);
    // r^3 lies in the kernel of chi_2 and chi_4, so it fixes that whole span.
    CHECK(fix_dim(D6, orb6[2], rot(D6, 3)) == 2);
    CHECK(fix_dim(D6, orb6[2], rot(D6, 1)) == 0);
    // The singleton orbit of chi_3 flips sign under odd reflections.
    CHECK(fix_dim(D6, orb6[3], refl(D6, 0)) == 1);
    CHECK(fix_dim(D6, orb6[3], refl(D6, 1)) == 0);
}

TEST_CASE("fixed dimension is a class function") {
    SemidirectGroup D5 = dihedral(5);
    auto orbits = character_orbits(D5, B);
    auto elements = all_elements(D5);
    for (const GElement& g : elements)
        for (const GElement& x : elements) {
            GElement c = g_mul(D5, g_mul(D5, x, g), g_inv(D5, x));
            CHECK(fix_dim(D5, orbits[1], g) == fix_dim(D5, orbits[1], c));
        }
}

TEST_CASE("multiplicities of the (1,1,1,7) quadrilateral") {
    SemidirectGroup D5 = dihedral(5);
    GeneratingTuple sigma = quad_1117(D5);
    CHECK(sigma.ell == 1);
    CHECK(sigma.entries.size() == 7);
    CHECK(sigma.entries[0] == rot(D5, 2));

    auto orbits = character_orbits(D5, B);
    CHECK(multiplicity(D5, orbits[0], sigma) == 0);
    CHECK(multiplicity(D5, orbits[1], sigma) == 4);
    CHECK(multiplicity(D5, orbits[2], sigma) == 4);
    CHECK(rel_count(D5, orbits[1], sigma) == 0);
    CHECK(genus_from_multiplicities({0, 4, 4}) == 4);
    CHECK(genus_riemann_hurwitz(D5, sigma, B) == 4);
}

TEST_CASE("multiplicities of the (1,1,2,8) quadrilateral") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = quad_1128(D6);
    CHECK(sigma.ell == 1);
    CHECK(sigma.entries[0] == rot(D6, 2));

    auto orbits = character_orbits(D6, B);
    CHECK(multiplicity(D6, orbits[1], sigma) == 4);
    CHECK(multiplicity(D6, orbits[2], sigma) == 4);
    CHECK(multiplicity(D6, orbits[3], sigma) == 0);
    CHECK(rel_count(D6, orbits[1], sigma) == 0);
    CHECK(genus_riemann_hurwitz(D6, sigma, B) == 4);
}

TEST_CASE("multiplicities of the (1,1,2,2,12) pentagon") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = pent_112212(D6);
    CHECK(sigma.ell == 1);
    CHECK(g_is_identity(sigma.entries[0]));

    auto orbits = character_orbits(D6, B);
    CHECK(multiplicity(D6, orbits[1], sigma) == 4);
    CHECK(multiplicity(D6, orbits[2], sigma) == 4);
    CHECK(multiplicity(D6, orbits[3], sigma) == 0);
    // The identity prefix entry fixes the whole orbit span.
    CHECK(rel_count(D6, orbits[1], sigma) == 2);
    CHECK(genus_riemann_hurwitz(D6, sigma, B) == 4);
}

TEST_CASE("isotypic tables") {
    SemidirectGroup D5 = dihedral(5);
    IsotypicTable t = isotypic_table(D5, quad_1117(D5), B);
    CHECK(t.mult == std::vector<long long>{0, 4, 4});
    CHECK(t.genus == 4);

    SemidirectGroup D6 = dihedral(6);
    IsotypicTable t2 = isotypic_table(D6, pent_112212(D6), B);
    CHECK(t2.mult == std::vector<long long>{0, 4, 4, 0});
    CHECK(t2.genus == 4);
}

TEST_CASE("ladder sequences") {
    SemidirectGroup D5 = dihedral(5);
    auto phi1 = character_orbits(D5, B)[1];
    CHECK(lambda_sequence(D5, phi1, rot(D5, 2).a, 5) ==
          std::vector<long long>{1, 2, 6, 7, 11});

    SemidirectGroup D6 = dihedral(6);
    auto psi1 = character_orbits(D6, B)[1];
    CHECK(lambda_sequence(D6, psi1, rot(D6, 3).a, 3) == std::vector<long long>{0, 2, 4});
    CHECK(lambda_sequence(D6, psi1, rot(D6, 2).a, 4) == std::vector<long long>{0, 1, 3, 4});
    // Identity ladder: every nonnegative integer.
    CHECK(lambda_sequence(D6, psi1, rot(D6, 0).a, 5) ==
          std::vector<long long>{0, 1, 2, 3, 4});
}

TEST_CASE("hecke eigenvalues and stabilizers") {
    SemidirectGroup D5 = dihedral(5);
    auto phi1 = character_orbits(D5, B)[1];
    Cyclotomic expected =
        cyclo_scale(Rational(1, 2), cyclo_add(cyclo_root(5, 1), cyclo_root(5, 4)));
    CHECK(cyclo_equal(hecke_eigenvalue(D5, phi1, rot(D5, 1).a), expected));
    CHECK(cyclo_equal(hecke_eigenvalue(D5, phi1, zero_element(D5.A)),
                      cyclo_from_rational(Rational(1))));
    // Value at -a is the conjugate of the value at a.
    CHECK(cyclo_equal(hecke_eigenvalue(D5, phi1, rot(D5, 4).a),
                      cyclo_conj(hecke_eigenvalue(D5, phi1, rot(D5, 1).a))));

    CHECK(stabilizer_size(D5, zero_element(D5.A)) == 2);
    CHECK(stabilizer_size(D5, rot(D5, 1).a) == 1);
    SemidirectGroup D6 = dihedral(6);
    CHECK(stabilizer_size(D6, rot(D6, 3).a) == 2);
}

TEST_CASE("double coset size times stabilizer is constant") {
    for (long long N : {5, 6}) {
        SemidirectGroup G = dihedral(N);
        long long h2 = static_cast<long long>(G.H.size() * G.H.size());
        for (const GroupElement& a : enumerate_elements(G.A, B)) {
            std::set<GElement> coset;
            for (size_t i = 0; i < G.H.size(); ++i)
                for (size_t j = 0; j < G.H.size(); ++j)
                    coset.insert(g_mul(G, g_mul(G, GElement{zero_element(G.A), (int)i},
                                                GElement{a, 0}),
                                       GElement{zero_element(G.A), (int)j}));
            CHECK(static_cast<long long>(coset.size()) * stabilizer_size(G, a) == h2);
        }
    }
}

TEST_CASE("intersection sums") {
    SemidirectGroup D5 = dihedral(5);
    IsotypicTable t = isotypic_table(D5, quad_1117(D5), B);
    Cyclotomic s = intersection_sum(D5, t, rot(D5, 1).a);
    CHECK(as_rational(s) == Rational(3));
    CHECK(compare_real(s, cyclo_from_rational(Rational(2))) == Ordering::Greater);
    // At the identity the sum collapses to twice the genus.
    CHECK(as_rational(intersection_sum(D5, t, zero_element(D5.A))) == Rational(8));

    SemidirectGroup D6 = dihedral(6);
    IsotypicTable t2 = isotypic_table(D6, pent_112212(D6), B);
    Cyclotomic s2 = intersection_sum(D6, t2, rot(D6, 1).a);
    CHECK(as_rational(s2) == Rational(2));
    CHECK(compare_real(s2, cyclo_from_rational(Rational(2))) == Ordering::Equal);

    IsotypicTable t3 = isotypic_table(D6, quad_1128(D6), B);
    CHECK(as_rational(intersection_sum(D6, t3, rot(D6, 1).a)) == Rational(2));
}

TEST_CASE("self intersections") {
    SemidirectGroup D5 = dihedral(5);
    IsotypicTable t = isotypic_table(D5, quad_1117(D5), B);
    CHECK(as_rational(self_intersection(D5, t, rot(D5, 1).a)) == Rational(-4));
    CHECK(as_rational(self_intersection(D5, t, zero_element(D5.A))) == Rational(-6));
}

TEST_CASE("averaged trace equals fixed dimension") {
    for (long long N : {5, 6}) {
        SemidirectGroup G = dihedral(N);
        auto orbits = character_orbits(G, B);
        for (const CharacterOrbit& orb : orbits)
            for (const GElement& g : all_elements(G)) {
                Cyclotomic avg = averaged_trace(G, orb, g);
                CHECK(as_rational(avg) == Rational(fix_dim(G, orb, g)));
            }
    }
}

TEST_CASE("field of definition") {
    SemidirectGroup D5 = dihedral(5);
    auto orb5 = character_orbits(D5, B);
    FieldOfDefinition f = field_of_definition(D5, orb5[1]);
    CHECK(f.degree == 2);
    CHECK(f.generators.size() == 5);
    // Generators are the plain orbit sums, not averaged.
    CHECK(cyclo_equal(f.generators[element_index(D5.A, rot(D5, 1).a)],
                      cyclo_add(cyclo_root(5, 1), cyclo_root(5, 4))));

    SemidirectGroup D6 = dihedral(6);
    auto orb6 = character_orbits(D6, B);
    CHECK(field_of_definition(D6, orb6[1]).degree == 1);
    CHECK(field_of_definition(D6, orb6[3]).degree == 1);

    SemidirectGroup D7 = dihedral(7);
    auto orb7 = character_orbits(D7, B);
    CHECK(field_of_definition(D7, orb7[1]).degree == 3);
    CHECK(field_of_definition(D7, orb7[2]).degree == 3);
}
