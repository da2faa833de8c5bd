#include "occ/semidirect.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "occ/errors.hpp"

namespace occ {

int SemidirectGroup::index_of(const Automorphism& h) const {
    auto it = h_index.find(h);
    if (it == h_index.end()) throw InputError("automorphism is not in the acting group");
    return it->second;
}

SemidirectGroup make_semidirect(const AbelianGroup& A, const std::vector<Automorphism>& h_gens,
                                long long bound) {
    for (const auto& g : h_gens)
        if (g.m.size() != A.factors.size())
            throw InputError("automorphism size does not match group rank");
    SemidirectGroup G;
    G.A = A;
    G.H.push_back(identity_automorphism(A));
    G.h_index.emplace(G.H[0], 0);
    for (size_t i = 0; i < G.H.size(); ++i)
        for (const auto& g : h_gens) {
            Automorphism nh = compose(A, G.H[i], g);
            if (G.h_index.emplace(nh, static_cast<int>(G.H.size())).second) {
                G.H.push_back(nh);
                if (static_cast<long long>(G.H.size()) > bound)
                    throw LimitError("acting group closure exceeds enumeration bound " +
                                     std::to_string(bound));
            }
        }
    size_t n = G.H.size();
    G.hmul.assign(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto it = G.h_index.find(compose(A, G.H[i], G.H[j]));
            if (it == G.h_index.end())
                throw InternalError("acting group closure is not closed under composition");
            G.hmul[i][j] = it->second;
        }
    G.hinv.assign(n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (G.hmul[i][j] == 0) {
                G.hinv[i] = static_cast<int>(j);
                break;
            }
    return G;
}

GElement g_identity(const SemidirectGroup& G) { return GElement{zero_element(G.A), 0}; }

bool g_is_identity(const GElement& x) { return x.h == 0 && is_zero(x.a); }

GElement g_mul(const SemidirectGroup& G, const GElement& x, const GElement& y) {
    return GElement{add(G.A, x.a, apply(G.A, G.H[x.h], y.a)), G.hmul[x.h][y.h]};
}

GElement g_inv(const SemidirectGroup& G, const GElement& x) {
    int hi = G.hinv[x.h];
    return GElement{neg(G.A, apply(G.A, G.H[hi], x.a)), hi};
}

long long g_order(const SemidirectGroup& G, const GElement& x) {
    GElement acc = x;
    long long n = 1;
    while (!g_is_identity(acc)) {
        acc = g_mul(G, acc, x);
        ++n;
        if (n > G.order()) throw InternalError("element order exceeds the group order");
    }
    return n;
}

GroupElement affine_apply(const SemidirectGroup& G, const GElement& g, const GroupElement& x) {
    return add(G.A, g.a, apply(G.A, G.H[g.h], x));
}

long long affine_cycle_count(const SemidirectGroup& G, const GElement& g, long long bound) {
    std::vector<GroupElement> elems = enumerate_elements(G.A, bound);
    std::vector<char> visited(elems.size(), 0);
    long long cycles = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (visited[i]) continue;
        ++cycles;
        GroupElement x = elems[i];
        while (true) {
            size_t idx = static_cast<size_t>(element_index(G.A, x));
            if (visited[idx]) break;
            visited[idx] = 1;
            x = affine_apply(G, g, x);
        }
    }
    return cycles;
}

void validate_tuple(const SemidirectGroup& G, const GeneratingTuple& sigma, long long bound) {
    int n = static_cast<int>(sigma.entries.size());
    if (sigma.ell < 0 || sigma.ell > n) throw InputError("prefix length out of range");
    for (int i = 0; i < n; ++i) {
        if (i < sigma.ell && sigma.entries[i].h != 0)
            throw InputError("prefix entry lies outside the base group");
        if (i >= sigma.ell && sigma.entries[i].h == 0)
            throw InputError("base-group entry appears after the designated prefix");
    }
    GElement prod = g_identity(G);
    for (const auto& g : sigma.entries) prod = g_mul(G, prod, g);
    if (!g_is_identity(prod)) throw InputError("tuple product is not the identity");

    if (G.order() > bound)
        throw LimitError("group order exceeds enumeration bound " + std::to_string(bound));
    std::set<GElement> seen{g_identity(G)};
    std::vector<GElement> frontier{g_identity(G)};
    while (!frontier.empty()) {
        std::vector<GElement> next;
        for (const auto& x : frontier)
            for (const auto& g : sigma.entries) {
                GElement y = g_mul(G, x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (static_cast<long long>(seen.size()) != G.order())
        throw InputError("tuple does not generate the group");
}

GeneratingTuple normalize_tuple(const SemidirectGroup& G, const std::vector<GElement>& entries) {
    GElement before = g_identity(G);
    for (const auto& g : entries) before = g_mul(G, before, g);

    GeneratingTuple out;
    out.entries = entries;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < out.entries.size(); ++i)
            if (out.entries[i].h != 0 && out.entries[i + 1].h == 0) {
                GElement x = out.entries[i], y = out.entries[i + 1];
                out.entries[i] = y;
                out.entries[i + 1] = g_mul(G, g_mul(G, g_inv(G, y), x), y);
                moved = true;
            }
    }
    for (const auto& g : out.entries)
        if (g.h == 0) ++out.ell;

    GElement after = g_identity(G);
    for (const auto& g : out.entries) after = g_mul(G, after, g);
    if (!(before == after)) throw InternalError("normalization changed the tuple product");
    return out;
}

std::vector<GroupElement> fixed_subgroup(const SemidirectGroup& G, long long bound) {
    std::vector<GroupElement> out;
    for (const auto& x : enumerate_elements(G.A, bound)) {
        bool fixed = true;
        for (const auto& h : G.H)
            if (apply(G.A, h, x) != x) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(x);
    }
    return out;
}

}  // namespace occ
