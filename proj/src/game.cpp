#include "occ/game.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "occ/errors.hpp"

namespace occ {

namespace {

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Number of h in H with chi(h(a)) = zeta_N^(d + 1) for some listed d, where
// N is the order of a.
long long fiber_move_cost(const SemidirectGroup& G, const Character& chi, const GroupElement& a,
                          const std::vector<long long>& ds) {
    long long N = element_order(G.A, a);
    long long e = G.A.exponent();
    long long cof = e / N;
    std::set<long long> targets;
    for (long long d : ds) targets.insert(mod_ll((d + 1) * cof, e));
    long long count = 0;
    for (const Automorphism& h : G.H)
        if (targets.count(character_exponent(G.A, chi, apply(G.A, h, a)))) ++count;
    return count;
}

}  // namespace

GameSpec build_game(const SemidirectGroup& G, const GeneratingTuple& sigma,
                    const IsotypicTable& table, size_t orbit_index, long long bound,
                    const GameOptions& options) {
    const CharacterOrbit& orbit = table.orbits.at(orbit_index);
    if (orbit.is_trivial) throw InputError("the trivial orbit does not define a game");
    if (!orbit.conj_closed)
        throw InputError("game orbit is not closed under complex conjugation");
    long long m1 = table.mult.at(orbit_index);
    if (m1 % 2 != 0)
        throw InternalError("conjugation-closed orbit with odd multiplicity");

    GameSpec spec;
    long long n = static_cast<long long>(sigma.entries.size());
    long long rho = rel_count(G, orbit, sigma);
    spec.tokens = n - m1 / 2 - rho - 3;
    if (spec.tokens < 0) throw InputError("negative token budget");
    spec.target = -2;
    for (long long m : table.mult) spec.target += m;

    std::vector<GroupElement> fixed = fixed_subgroup(G, bound);
    for (int i = 0; i < sigma.ell; ++i) {
        const GroupElement& a = sigma.entries[static_cast<size_t>(i)].a;
        GameFiber fiber;
        fiber.generator = a;

        QuotientData qd = quotient(G.A, SubgroupPresentation{{a}}, bound);
        long long points = qd.q.order();
        fiber.point_count = points;

        std::set<GroupElement> image;
        for (const GroupElement& x : fixed) image.insert(qd.project(x));
        std::vector<char> seen(static_cast<size_t>(points), 0);
        for (long long idx = 0; idx < points; ++idx) {
            if (seen[static_cast<size_t>(idx)]) continue;
            GroupElement p = element_at(qd.q, idx);
            std::set<int> cls;
            for (const GroupElement& x : image)
                cls.insert(static_cast<int>(element_index(qd.q, add(qd.q, p, x))));
            for (int j : cls) seen[static_cast<size_t>(j)] = 1;
            fiber.classes.emplace_back(cls.begin(), cls.end());
        }

        int request = static_cast<int>(std::max<long long>(spec.target, 0)) + 2;
        std::vector<long long> ladder = lambda_sequence(G, orbit, a, request);
        for (long long w : ladder)
            if (w <= spec.target) fiber.weights.push_back(w);
        if (fiber.weights.empty()) fiber.weights.push_back(ladder.front());

        for (size_t k = 0; k + 1 < fiber.weights.size(); ++k) {
            std::vector<long long> ds(fiber.weights.begin(),
                                      fiber.weights.begin() + static_cast<long>(k) + 1);
            long long cost = 0;
            if (options.minimize_move2_cost) {
                for (const Character& chi : orbit.members) {
                    long long c = fiber_move_cost(G, chi, a, ds);
                    if (cost == 0 || c < cost) cost = c;
                }
            } else {
                cost = fiber_move_cost(G, orbit.members.front(), a, ds);
            }
            if (cost < 1) throw InternalError("fiber move with nonpositive cost");
            fiber.move2_cost.push_back(cost);
        }
        spec.fibers.push_back(std::move(fiber));
    }
    return spec;
}

GameResult solve_game(const GameSpec& spec, const GameOptions& options) {
    size_t nf = spec.fibers.size();
    std::vector<size_t> offset(nf + 1, 0);
    for (size_t f = 0; f < nf; ++f)
        offset[f + 1] = offset[f] + spec.fibers[f].classes.size();
    size_t nc = offset[nf];

    std::vector<long long> class_size(nc);
    std::vector<size_t> fiber_of(nc);
    for (size_t f = 0; f < nf; ++f)
        for (size_t c = 0; c < spec.fibers[f].classes.size(); ++c) {
            class_size[offset[f] + c] =
                static_cast<long long>(spec.fibers[f].classes[c].size());
            fiber_of[offset[f] + c] = f;
        }

    using State = std::vector<int>;
    auto total_weight = [&](const State& s) {
        long long t = 0;
        for (size_t c = 0; c < nc; ++c)
            t += class_size[c] * spec.fibers[fiber_of[c]].weights[static_cast<size_t>(s[c])];
        return t;
    };
    auto uniform_index = [&](const State& s, size_t f) -> long long {
        long long k = s[offset[f]];
        for (size_t c = offset[f]; c < offset[f + 1]; ++c)
            if (s[c] != k) return -1;
        return k;
    };
    auto is_win = [&](const State& s) {
        if (total_weight(s) != spec.target) return false;
        for (size_t f = 0; f < nf; ++f)
            if (uniform_index(s, f) < 0) return false;
        return true;
    };

    State initial(nc, 0);
    std::map<State, long long> best;
    std::map<State, std::pair<State, GameMove>> parent;
    using QItem = std::pair<long long, State>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> queue;
    best[initial] = 0;
    queue.push({0, initial});

    GameResult res;
    std::set<std::vector<long long>> configs;
    bool have_selected = false;
    State selected;

    while (!queue.empty()) {
        auto [spent, state] = queue.top();
        queue.pop();
        auto it = best.find(state);
        if (it == best.end() || it->second != spent) continue;

        if (is_win(state)) {
            std::vector<long long> config;
            for (size_t f = 0; f < nf; ++f)
                config.push_back(
                    spec.fibers[f].weights[static_cast<size_t>(uniform_index(state, f))]);
            configs.insert(config);
            if (!have_selected) {
                have_selected = true;
                selected = state;
                res.won = true;
                res.tokens_spent = spent;
                res.final_weights = config;
            }
        }

        auto relax = [&](const State& next, long long nspent, const GameMove& move) {
            if (nspent > spec.tokens) return;
            auto found = best.find(next);
            if (found != best.end() && found->second <= nspent) return;
            if (found == best.end() &&
                static_cast<long long>(best.size()) >= options.state_cap)
                throw LimitError("game state space exceeds the configured cap");
            best[next] = nspent;
            parent[next] = {state, move};
            queue.push({nspent, next});
        };

        for (size_t c = 0; c < nc; ++c) {
            size_t f = fiber_of[c];
            if (static_cast<size_t>(state[c]) + 1 >= spec.fibers[f].weights.size()) continue;
            State next = state;
            ++next[c];
            GameMove move{1, static_cast<int>(f), static_cast<int>(c - offset[f]), 1,
                          state[c]};
            relax(next, spent + 1, move);
        }
        for (size_t f = 0; f < nf; ++f) {
            long long k = uniform_index(state, f);
            if (k < 0 || static_cast<size_t>(k) + 1 >= spec.fibers[f].weights.size()) continue;
            long long cost = spec.fibers[f].move2_cost[static_cast<size_t>(k)];
            State next = state;
            for (size_t c = offset[f]; c < offset[f + 1]; ++c) ++next[c];
            GameMove move{2, static_cast<int>(f), 0, cost, k};
            relax(next, spent + cost, move);
        }
    }

    res.winning_configs.assign(configs.begin(), configs.end());
    if (res.won) {
        State cur = selected;
        while (!(cur == initial)) {
            auto& [prev, move] = parent.at(cur);
            res.transcript.push_back(move);
            cur = prev;
        }
        std::reverse(res.transcript.begin(), res.transcript.end());
    } else {
        res.reason = "no uniform configuration with weight sum " +
                     std::to_string(spec.target) + " is reachable with " +
                     std::to_string(spec.tokens) + " tokens";
    }
    return res;
}

}  // namespace occ
