#include "doctest.h"

#include "occ/errors.hpp"
#include "occ/game.hpp"

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

// Reflection pairs for the small corners, one rotation for the large one.
GeneratingTuple unfold(const SemidirectGroup& G, const std::vector<long long>& small,
                       long long large) {
    std::vector<GElement> raw;
    for (long long k : small) {
        raw.push_back(refl(G, k));
        raw.push_back(refl(G, 0));
    }
    raw.push_back(rot(G, large));
    GeneratingTuple sigma = normalize_tuple(G, raw);
    validate_tuple(G, sigma, B);
    return sigma;
}

}  // namespace

TEST_CASE("game for the (1,1,1,7) quadrilateral") {
    SemidirectGroup D5 = dihedral(5);
    GeneratingTuple sigma = unfold(D5, {1, 1, 1}, 7);
    IsotypicTable table = isotypic_table(D5, sigma, B);
    GameSpec spec = build_game(D5, sigma, table, 1, B);

    CHECK(spec.tokens == 2);
    CHECK(spec.target == 6);
    REQUIRE(spec.fibers.size() == 1);
    const GameFiber& f = spec.fibers[0];
    CHECK(f.point_count == 1);
    CHECK(f.classes == std::vector<std::vector<int>>{{0}});
    CHECK(f.weights == std::vector<long long>{1, 2, 6});
    CHECK(f.move2_cost == std::vector<long long>{1, 2});

    GameResult res = solve_game(spec);
    CHECK(res.won);
    CHECK(res.tokens_spent == 2);
    CHECK(res.final_weights == std::vector<long long>{6});
    REQUIRE(res.transcript.size() == 2);
    CHECK(res.transcript[0].type == 1);
    CHECK(res.transcript[1].type == 1);
    CHECK(res.transcript[0].cost == 1);
    CHECK(res.winning_configs == std::vector<std::vector<long long>>{{6}});
}

TEST_CASE("game for the (1,1,1,9) quadrilateral") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = unfold(D6, {1, 1, 1}, 9);
    IsotypicTable table = isotypic_table(D6, sigma, B);
    CHECK(table.mult == std::vector<long long>{0, 4, 2, 2});
    CHECK(table.genus == 4);

    GameSpec spec = build_game(D6, sigma, table, 1, B);
    CHECK(spec.tokens == 2);
    CHECK(spec.target == 6);
    REQUIRE(spec.fibers.size() == 1);
    const GameFiber& f = spec.fibers[0];
    CHECK(f.point_count == 3);
    // The fixed subgroup projects trivially, so every point is its own class.
    CHECK(f.classes == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(f.weights == std::vector<long long>{0, 2, 4, 6});
    CHECK(f.move2_cost == std::vector<long long>{2, 2, 2});

    GameResult res = solve_game(spec);
    CHECK(res.won);
    CHECK(res.tokens_spent == 2);
    CHECK(res.final_weights == std::vector<long long>{2});
    REQUIRE(res.transcript.size() == 1);
    CHECK(res.transcript[0].type == 2);
    CHECK(res.transcript[0].cost == 2);
    CHECK(res.winning_configs == std::vector<std::vector<long long>>{{2}});
}

TEST_CASE("game for the (1,1,2,8) quadrilateral") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = unfold(D6, {1, 1, 2}, 8);
    IsotypicTable table = isotypic_table(D6, sigma, B);
    GameSpec spec = build_game(D6, sigma, table, 1, B);

    CHECK(spec.tokens == 2);
    CHECK(spec.target == 6);
    REQUIRE(spec.fibers.size() == 1);
    const GameFiber& f = spec.fibers[0];
    CHECK(f.point_count == 2);
    // The fixed subgroup surjects onto the two cosets, one class of two points.
    CHECK(f.classes == std::vector<std::vector<int>>{{0, 1}});
    CHECK(f.weights == std::vector<long long>{0, 1, 3, 4, 6});
    CHECK(f.move2_cost == std::vector<long long>{1, 2, 2, 2});

    GameResult res = solve_game(spec);
    CHECK(res.won);
    CHECK(res.tokens_spent == 2);
    CHECK(res.final_weights == std::vector<long long>{3});
    REQUIRE(res.transcript.size() == 2);
    CHECK(res.transcript[0].type == 1);
    CHECK(res.transcript[1].type == 1);
}

TEST_CASE("game for the (1,1,2,2,12) pentagon") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = unfold(D6, {1, 1, 2, 2}, 12);
    IsotypicTable table = isotypic_table(D6, sigma, B);
    GameSpec spec = build_game(D6, sigma, table, 1, B);

    CHECK(spec.tokens == 2);
    CHECK(spec.target == 6);
    REQUIRE(spec.fibers.size() == 1);
    const GameFiber& f = spec.fibers[0];
    CHECK(f.point_count == 6);
    REQUIRE(f.classes.size() == 3);
    for (const auto& cls : f.classes) CHECK(cls.size() == 2);
    CHECK(f.weights == std::vector<long long>{0, 1, 2, 3, 4, 5, 6});
    // The identity generator makes every root-of-unity condition trivial.
    CHECK(f.move2_cost == std::vector<long long>(6, 2));

    GameResult res = solve_game(spec);
    CHECK(res.won);
    CHECK(res.tokens_spent == 2);
    CHECK(res.final_weights == std::vector<long long>{1});
    REQUIRE(res.transcript.size() == 1);
    CHECK(res.transcript[0].type == 2);
}

TEST_CASE("game won at the initial configuration") {
    // Triangle (1, 5, 6): two fibers, the second of weight zero.
    SemidirectGroup D12 = dihedral(12);
    std::vector<GElement> raw = {refl(D12, 1), refl(D12, 0), rot(D12, 5), rot(D12, 6)};
    GeneratingTuple sigma = normalize_tuple(D12, raw);
    validate_tuple(D12, sigma, B);
    CHECK(sigma.ell == 2);

    IsotypicTable table = isotypic_table(D12, sigma, B);
    CHECK(table.genus == 3);
    GameSpec spec = build_game(D12, sigma, table, 1, B);
    CHECK(spec.tokens == 0);
    CHECK(spec.target == 4);
    REQUIRE(spec.fibers.size() == 2);
    CHECK(spec.fibers[0].point_count == 1);
    CHECK(spec.fibers[0].weights == std::vector<long long>{4});
    CHECK(spec.fibers[1].point_count == 6);
    CHECK(spec.fibers[1].weights == std::vector<long long>{0, 2, 4});

    GameResult res = solve_game(spec);
    CHECK(res.won);
    CHECK(res.tokens_spent == 0);
    CHECK(res.transcript.empty());
    CHECK(res.final_weights == std::vector<long long>{4, 0});
}

TEST_CASE("unwinnable game") {
    // The second nontrivial orbit of the (1,1,1,7) tuple has ladder 0, 3, 5:
    // the single point can never carry the full target weight.
    SemidirectGroup D5 = dihedral(5);
    GeneratingTuple sigma = unfold(D5, {1, 1, 1}, 7);
    IsotypicTable table = isotypic_table(D5, sigma, B);
    GameSpec spec = build_game(D5, sigma, table, 2, B);
    CHECK(spec.fibers[0].weights == std::vector<long long>{0, 3, 5});

    GameResult res = solve_game(spec);
    CHECK(!res.won);
    CHECK(!res.reason.empty());
    CHECK(res.winning_configs.empty());
}

TEST_CASE("move cost minimization never raises a cost") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = unfold(D6, {1, 1, 2}, 8);
    IsotypicTable table = isotypic_table(D6, sigma, B);
    GameSpec plain = build_game(D6, sigma, table, 1, B);
    GameOptions opt;
    opt.minimize_move2_cost = true;
    GameSpec cheap = build_game(D6, sigma, table, 1, B, opt);
    for (size_t i = 0; i < plain.fibers.size(); ++i)
        for (size_t k = 0; k < plain.fibers[i].move2_cost.size(); ++k)
            CHECK(cheap.fibers[i].move2_cost[k] <= plain.fibers[i].move2_cost[k]);
    CHECK(solve_game(cheap).won == solve_game(plain).won);
}

TEST_CASE("state cap") {
    SemidirectGroup D6 = dihedral(6);
    GeneratingTuple sigma = unfold(D6, {1, 1, 2, 2}, 12);
    IsotypicTable table = isotypic_table(D6, sigma, B);
    GameSpec spec = build_game(D6, sigma, table, 1, B);
    GameOptions opt;
    opt.state_cap = 2;
    CHECK_THROWS_AS(solve_game(spec, opt), LimitError);
}

TEST_CASE("build rejects unusable orbits") {
    SemidirectGroup D5 = dihedral(5);
    GeneratingTuple sigma = unfold(D5, {1, 1, 1}, 7);
    IsotypicTable table = isotypic_table(D5, sigma, B);
    CHECK_THROWS_AS(build_game(D5, sigma, table, 0, B), InputError);

    AbelianGroup A = make_group({5});
    SemidirectGroup C5 = make_semidirect(A, {}, B);
    // With trivial H the orbit {chi_1} is not conjugation-closed.
    std::vector<GElement> raw = {GElement{reduce_element(A, {1}), 0},
                                 GElement{reduce_element(A, {1}), 0},
                                 GElement{reduce_element(A, {3}), 0}};
    GeneratingTuple tau = normalize_tuple(C5, raw);
    validate_tuple(C5, tau, B);
    IsotypicTable cyc = isotypic_table(C5, tau, B);
    CHECK_THROWS_AS(build_game(C5, tau, cyc, 1, B), InputError);
}
