#pragma once

#include <string>
#include <vector>

#include "occ/hecke.hpp"

namespace occ {

// One fiber of the order-of-vanishing game.  The points above a base entry
// g_i are the cosets A / <g_i>, grouped into translation classes of the
// subgroup of A fixed by H; all points of a fiber draw weights from the same
// ladder, truncated once a weight alone exceeds the target.
struct GameFiber {
    GroupElement generator;
    long long point_count = 0;
    std::vector<std::vector<int>> classes;
    std::vector<long long> weights;
    // move2_cost[k] is the token cost of advancing the whole fiber from
    // weight index k to k + 1.
    std::vector<long long> move2_cost;
};

struct GameSpec {
    long long tokens = 0;  // E = n - r - rho - 3
    long long target = 0;  // -2 + sum of multiplicities
    std::vector<GameFiber> fibers;
};

struct GameOptions {
    // Price fiber moves with the cheapest orbit character instead of the
    // smallest one.
    bool minimize_move2_cost = false;
    long long state_cap = 2000000;
};

// Assembles the game for the orbit at orbit_index.  InputError when the
// orbit is trivial or not conjugation-closed, or when the token budget is
// negative.
GameSpec build_game(const SemidirectGroup& G, const GeneratingTuple& sigma,
                    const IsotypicTable& table, size_t orbit_index, long long bound,
                    const GameOptions& options = {});

struct GameMove {
    int type = 1;  // 1 advances one class, 2 advances a whole fiber
    int fiber = 0;
    int cls = 0;  // class within the fiber, type 1 only
    long long cost = 1;
    long long from_index = 0;
};

struct GameResult {
    bool won = false;
    long long tokens_spent = 0;
    // Uniform weight per fiber in the selected winning configuration.
    std::vector<long long> final_weights;
    std::vector<GameMove> transcript;
    // Every reachable winning configuration, sorted.
    std::vector<std::vector<long long>> winning_configs;
    std::string reason;
};

// Exhaustive search over reachable states; the selected win minimizes spent
// tokens and then compares lexicographically.  Throws LimitError when the
// number of distinct states exceeds options.state_cap.
GameResult solve_game(const GameSpec& spec, const GameOptions& options = {});

}  // namespace occ
