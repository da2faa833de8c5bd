#include "doctest.h"

#include <set>

#include "occ/errors.hpp"
#include "occ/semidirect.hpp"

using namespace occ;

namespace {

// Dihedral group of order 2N as Z/N x| <negation>.
SemidirectGroup dihedral(long long N) {
    AbelianGroup A = make_group({N});
    return make_semidirect(A, {make_automorphism(A, {{-1}})}, 1000000);
}

GElement rot(const SemidirectGroup& G, long long k) {
    return GElement{reduce_element(G.A, {k}), 0};
}

GElement refl(const SemidirectGroup& G, long long k) {
    return GElement{reduce_element(G.A, {k}), 1};
}

}  // namespace

TEST_CASE("closure of the automorphism part") {
    SemidirectGroup D5 = dihedral(5);
    CHECK(D5.H.size() == 2);
    CHECK(D5.order() == 10);
    CHECK(D5.H[0] == identity_automorphism(D5.A));
    CHECK(D5.hmul[1][1] == 0);
    CHECK(D5.hinv[1] == 1);

    // Klein four group {id, -I, swap, -swap} on (Z/20)^2.
    AbelianGroup A = make_group({20, 20});
    SemidirectGroup G = make_semidirect(
        A,
        {make_automorphism(A, {{-1, 0}, {0, -1}}), make_automorphism(A, {{0, 1}, {1, 0}})},
        1000000);
    CHECK(G.H.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(G.hmul[i][i] == 0);

    CHECK_THROWS_AS(make_semidirect(A, {make_automorphism(A, {{0, 1}, {1, 0}})}, 1),
                    LimitError);
}

TEST_CASE("multiplication and inversion in D5") {
    SemidirectGroup G = dihedral(5);
    GElement r = rot(G, 1), t = refl(G, 0);
    CHECK(g_is_identity(g_mul(G, t, t)));
    // t r = r^-1 t
    CHECK(g_mul(G, t, r) == g_mul(G, g_inv(G, r), t));
    CHECK(g_mul(G, t, r) == refl(G, 4));
    CHECK(g_order(G, r) == 5);
    CHECK(g_order(G, t) == 2);
    CHECK(g_order(G, refl(G, 1)) == 2);
    CHECK(g_inv(G, refl(G, 1)) == refl(G, 1));
    CHECK(g_inv(G, rot(G, 2)) == rot(G, 3));

    // Exhaustive associativity and inverse check, |G| = 10.
    std::vector<GElement> all;
    for (long long a = 0; a < 5; ++a)
        for (int h = 0; h < 2; ++h) all.push_back(GElement{reduce_element(G.A, {a}), h});
    for (const auto& x : all) {
        CHECK(g_is_identity(g_mul(G, x, g_inv(G, x))));
        for (const auto& y : all)
            for (const auto& z : all)
                CHECK(g_mul(G, g_mul(G, x, y), z) == g_mul(G, x, g_mul(G, y, z)));
    }
}

TEST_CASE("affine action and its cycle count") {
    SemidirectGroup G = dihedral(5);
    CHECK(affine_apply(G, refl(G, 1), reduce_element(G.A, {3})) == reduce_element(G.A, {3}));
    // x -> -x on Z/5: orbits {0}, {1,4}, {2,3}.
    CHECK(affine_cycle_count(G, refl(G, 0), 1000) == 3);
    // x -> 1 - x: orbits {0,1}, {2,4}, {3}.
    CHECK(affine_cycle_count(G, refl(G, 1), 1000) == 3);
    // x -> x + 1: a single 5-cycle.
    CHECK(affine_cycle_count(G, rot(G, 1), 1000) == 1);
    CHECK(affine_cycle_count(G, g_identity(G), 1000) == 5);
}

TEST_CASE("tuple validation") {
    SemidirectGroup G = dihedral(5);
    GeneratingTuple good{{rot(G, 1), refl(G, 0), refl(G, 1)}, 1};
    CHECK(g_is_identity(g_mul(G, g_mul(G, good.entries[0], good.entries[1]), good.entries[2])));
    CHECK_NOTHROW(validate_tuple(G, good, 1000000));

    GeneratingTuple bad_product{{rot(G, 1), refl(G, 0), refl(G, 0)}, 1};
    CHECK_THROWS_AS(validate_tuple(G, bad_product, 1000000), InputError);

    // Reflections in even positions only generate a proper subgroup of D6.
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple small{{rot(D6, 2), refl(D6, 0), refl(D6, 2)}, 1};
    CHECK(g_is_identity(
        g_mul(D6, g_mul(D6, small.entries[0], small.entries[1]), small.entries[2])));
    CHECK_THROWS_AS(validate_tuple(D6, small, 1000000), InputError);

    GeneratingTuple misplaced{{refl(G, 0), rot(G, 1), refl(G, 1)}, 1};
    CHECK_THROWS_AS(validate_tuple(G, misplaced, 1000000), InputError);
    GeneratingTuple late_base{{rot(G, 1), refl(G, 0), rot(G, 0), refl(G, 1)}, 1};
    CHECK_THROWS_AS(validate_tuple(G, late_base, 1000000), InputError);
    // Identity entries inside the prefix are legal.
    GeneratingTuple padded{{rot(G, 0), rot(G, 1), refl(G, 0), refl(G, 1)}, 2};
    CHECK_NOTHROW(validate_tuple(G, padded, 1000000));
}

TEST_CASE("normalization bubbles base entries to the front") {
    SemidirectGroup G = dihedral(5);
    std::vector<GElement> raw{refl(G, 0), refl(G, 1), rot(G, 1)};
    GElement prod = g_identity(G);
    for (const auto& g : raw) prod = g_mul(G, prod, g);
    REQUIRE(g_is_identity(prod));

    GeneratingTuple norm = normalize_tuple(G, raw);
    CHECK(norm.ell == 1);
    CHECK(norm.entries.size() == 3);
    CHECK(norm.entries[0].h == 0);
    CHECK(norm.entries[1].h != 0);
    CHECK(norm.entries[2].h != 0);
    GElement prod2 = g_identity(G);
    for (const auto& g : norm.entries) prod2 = g_mul(G, prod2, g);
    CHECK(g_is_identity(prod2));
    CHECK_NOTHROW(validate_tuple(G, norm, 1000000));

    // Already-normalized input is returned with the prefix counted.
    GeneratingTuple idem = normalize_tuple(G, {rot(G, 1), refl(G, 0), refl(G, 1)});
    CHECK(idem.ell == 1);
    CHECK(idem.entries[0] == rot(G, 1));
}

TEST_CASE("fixed subgroup of the automorphism part") {
    CHECK(fixed_subgroup(dihedral(5), 1000).size() == 1);
    auto f6 = fixed_subgroup(dihedral(6), 1000);
    REQUIRE(f6.size() == 2);
    CHECK(f6[0] == reduce_element(make_group({6}), {0}));
    CHECK(f6[1] == reduce_element(make_group({6}), {3}));

    AbelianGroup A = make_group({20, 20});
    SemidirectGroup G = make_semidirect(
        A,
        {make_automorphism(A, {{-1, 0}, {0, -1}}), make_automorphism(A, {{0, 1}, {1, 0}})},
        1000000);
    // Fixed by swap: x = y; fixed by -I: 2x = 0; intersection {(0,0), (10,10)}.
    CHECK(fixed_subgroup(G, 1000).size() == 2);
}
