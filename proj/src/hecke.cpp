#include "occ/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "occ/errors.hpp"

namespace occ {

namespace {

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<CharacterOrbit> character_orbits(const SemidirectGroup& G, long long bound) {
    std::vector<Character> all = all_characters(G.A, bound);
    std::set<Character> seen;
    std::vector<CharacterOrbit> orbits;
    for (const Character& chi : all) {
        if (seen.count(chi)) continue;
        std::set<Character> members;
        for (const Automorphism& h : G.H) members.insert(character_after(G.A, chi, h));
        CharacterOrbit orb;
        orb.members.assign(members.begin(), members.end());
        orb.is_trivial = is_trivial_character(orb.members.front());
        orb.conj_closed = true;
        for (const Character& m : orb.members) {
            seen.insert(m);
            if (!members.count(conj_character(G.A, m))) orb.conj_closed = false;
        }
        orbits.push_back(std::move(orb));
    }
    std::sort(orbits.begin(), orbits.end(), [](const CharacterOrbit& x, const CharacterOrbit& y) {
        return x.members.front() < y.members.front();
    });
    return orbits;
}

MonomialAction monomial_action(const SemidirectGroup& G, const CharacterOrbit& orbit,
                               const GElement& g) {
    const AbelianGroup& A = G.A;
    const Automorphism& hinv = G.H[static_cast<size_t>(G.hinv[static_cast<size_t>(g.h)])];
    MonomialAction M;
    M.e = A.exponent();
    M.perm.resize(orbit.members.size());
    M.scalar_exp.resize(orbit.members.size());
    for (size_t j = 0; j < orbit.members.size(); ++j) {
        Character target = character_after(A, orbit.members[j], hinv);
        auto it = std::lower_bound(orbit.members.begin(), orbit.members.end(), target);
        if (it == orbit.members.end() || !(*it == target))
            throw InternalError("character orbit is not closed under the group action");
        M.perm[j] = static_cast<int>(it - orbit.members.begin());
        M.scalar_exp[j] = mod_ll(-character_exponent(A, target, g.a), M.e);
    }
    return M;
}

long long fix_dim(const SemidirectGroup& G, const CharacterOrbit& orbit, const GElement& g) {
    MonomialAction M = monomial_action(G, orbit, g);
    size_t n = M.perm.size();
    std::vector<char> visited(n, 0);
    long long fixed = 0;
    for (size_t j = 0; j < n; ++j) {
        if (visited[j]) continue;
        long long sum = 0;
        size_t k = j;
        while (!visited[k]) {
            visited[k] = 1;
            sum += M.scalar_exp[k];
            k = static_cast<size_t>(M.perm[k]);
        }
        if (sum % M.e == 0) ++fixed;
    }
    return fixed;
}

long long multiplicity(const SemidirectGroup& G, const CharacterOrbit& orbit,
                       const GeneratingTuple& sigma) {
    if (orbit.is_trivial) return 0;
    long long n = static_cast<long long>(sigma.entries.size());
    long long m = (n - 2) * static_cast<long long>(orbit.members.size());
    for (const GElement& g : sigma.entries) m -= fix_dim(G, orbit, g);
    if (m < 0) throw InternalError("negative representation multiplicity");
    return m;
}

long long rel_count(const SemidirectGroup& G, const CharacterOrbit& orbit,
                    const GeneratingTuple& sigma) {
    long long total = 0;
    for (int i = 0; i < sigma.ell; ++i)
        total += fix_dim(G, orbit, sigma.entries[static_cast<size_t>(i)]);
    return total;
}

long long genus_from_multiplicities(const std::vector<long long>& mult) {
    long long total = 0;
    for (long long m : mult) total += m;
    if (total % 2 != 0) throw InternalError("multiplicities sum to an odd number");
    return total / 2;
}

long long genus_riemann_hurwitz(const SemidirectGroup& G, const GeneratingTuple& sigma,
                                long long bound) {
    long long deg = G.A.order();
    long long doubled = -2 * deg;
    for (const GElement& g : sigma.entries) doubled += deg - affine_cycle_count(G, g, bound);
    if (doubled % 2 != 0) throw InternalError("odd branching total in Riemann-Hurwitz");
    return doubled / 2 + 1;
}

IsotypicTable isotypic_table(const SemidirectGroup& G, const GeneratingTuple& sigma,
                             long long bound) {
    IsotypicTable t;
    t.orbits = character_orbits(G, bound);
    long long span = 0;
    for (const CharacterOrbit& orb : t.orbits)
        span += static_cast<long long>(orb.members.size());
    if (span != G.A.order()) throw InternalError("orbit sizes do not sum to |A|");
    for (const CharacterOrbit& orb : t.orbits) t.mult.push_back(multiplicity(G, orb, sigma));
    t.genus = genus_from_multiplicities(t.mult);
    long long check = genus_riemann_hurwitz(G, sigma, bound);
    if (check != t.genus)
        throw InternalError("genus computations disagree: multiplicities give " +
                            std::to_string(t.genus) + ", Riemann-Hurwitz gives " +
                            std::to_string(check));
    return t;
}

std::vector<long long> lambda_residues(const SemidirectGroup& G, const CharacterOrbit& orbit,
                                       const GroupElement& a) {
    const AbelianGroup& A = G.A;
    long long N = element_order(A, a);
    long long e = A.exponent();
    long long cof = e / N;
    std::set<long long> residues;
    for (const Character& chi : orbit.members) {
        long long t = character_exponent(A, chi, a);
        if (t % cof != 0) throw InternalError("character value is not an |a|-th root of unity");
        residues.insert(mod_ll(t / cof - 1, N));
    }
    return std::vector<long long>(residues.begin(), residues.end());
}

std::vector<long long> lambda_sequence(const SemidirectGroup& G, const CharacterOrbit& orbit,
                                       const GroupElement& a, int count) {
    long long N = element_order(G.A, a);
    std::vector<long long> residues = lambda_residues(G, orbit, a);
    std::set<long long> rset(residues.begin(), residues.end());
    std::vector<long long> out;
    for (long long d = 0; static_cast<int>(out.size()) < count; ++d)
        if (rset.count(d % N)) out.push_back(d);
    return out;
}

Cyclotomic hecke_eigenvalue(const SemidirectGroup& G, const CharacterOrbit& orbit,
                            const GroupElement& a) {
    long long e = G.A.exponent();
    Cyclotomic total = cyclo_zero();
    for (const Character& chi : orbit.members)
        total = cyclo_add(total, cyclo_root(e, character_exponent(G.A, chi, a)));
    return cyclo_scale(Rational(1, static_cast<long long>(orbit.members.size())), total);
}

long long stabilizer_size(const SemidirectGroup& G, const GroupElement& a) {
    long long count = 0;
    for (const Automorphism& h : G.H)
        if (apply(G.A, h, a) == a) ++count;
    return count;
}

Cyclotomic intersection_sum(const SemidirectGroup& G, const IsotypicTable& table,
                            const GroupElement& a) {
    Cyclotomic total = cyclo_zero();
    for (size_t j = 0; j < table.orbits.size(); ++j) {
        if (table.mult[j] == 0) continue;
        Cyclotomic term = abs_squared(hecke_eigenvalue(G, table.orbits[j], a));
        total = cyclo_add(total, cyclo_scale(Rational(table.mult[j]), term));
    }
    return total;
}

Cyclotomic self_intersection(const SemidirectGroup& G, const IsotypicTable& table,
                             const GroupElement& a) {
    long long order_h = static_cast<long long>(G.H.size());
    long long stab = stabilizer_size(G, a);
    Cyclotomic gap =
        cyclo_sub(cyclo_from_rational(Rational(2)), intersection_sum(G, table, a));
    return cyclo_scale(Rational(order_h * order_h, stab * stab), gap);
}

FieldOfDefinition field_of_definition(const SemidirectGroup& G, const CharacterOrbit& orbit) {
    const AbelianGroup& A = G.A;
    long long e = A.exponent();
    FieldOfDefinition f;
    for (long long idx = 0; idx < A.order(); ++idx) {
        GroupElement a = element_at(A, idx);
        Cyclotomic sum = cyclo_zero();
        for (const Character& chi : orbit.members)
            sum = cyclo_add(sum, cyclo_root(e, character_exponent(A, chi, a)));
        f.generators.push_back(sum);
    }
    f.degree = field_degree_of_sums(e, f.generators);

    // zeta -> zeta^k fixes every generator exactly when raising characters to
    // the k-th power permutes the orbit.
    for (long long k = 1; k < e; ++k) {
        if (std::gcd(k, e) != 1) continue;
        bool fixes = true;
        for (const Cyclotomic& gen : f.generators) {
            if (!cyclo_equal(galois(gen, k), gen)) {
                fixes = false;
                break;
            }
        }
        std::set<Character> powered;
        for (const Character& chi : orbit.members) {
            std::vector<long long> d;
            for (long long dj : chi.d) d.push_back(dj * k);
            powered.insert(make_character(A, std::move(d)));
        }
        bool permutes = std::equal(powered.begin(), powered.end(), orbit.members.begin(),
                                   orbit.members.end());
        if (fixes != permutes) throw InternalError("field degree cross-check failed");
    }
    return f;
}

}  // namespace occ
