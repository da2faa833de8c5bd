#include "occ/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "occ/errors.hpp"
#include "occ/hecke.hpp"

namespace occ {

namespace {

std::string join(const std::vector<long long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

long long dihedral_order(const SemidirectGroup& G) {
    if (G.A.factors.size() != 1 || G.H.size() != 2) throw InputError("the group is not dihedral");
    GroupElement e1 = reduce_element(G.A, {1});
    if (!(apply(G.A, G.H[1], e1) == neg(G.A, e1)))
        throw InputError("the group is not dihedral");
    return G.A.factors[0];
}

}  // namespace

BouwMollerData bouw_moller(long long N, long long M, long long bound) {
    if (M < 2 || M > N) throw InputError("parameters must satisfy 2 <= M <= N");

    BouwMollerData data;
    data.N = N;
    data.M = M;
    data.gamma = std::gcd(N, M);
    data.n = N / data.gamma;
    data.m = M / data.gamma;
    data.case1 = N % 2 == 0 && M % 2 == 0 && data.n % 2 == 1 && data.m % 2 == 1;
    if (data.case1) {
        data.L = data.gamma * data.n * data.m;
        data.a = (data.L - data.n - data.m) / 2;
        data.b = (data.L - data.n + data.m) / 2;
    } else {
        data.L = 2 * data.gamma * data.n * data.m;
        data.a = data.L / 2 - (data.n + data.m);
        data.b = data.L / 2 - (data.n - data.m);
    }
    long long L = data.L, a = data.a, b = data.b;
    if (a <= 1)
        throw InputError("degenerate parameters: zero order a - 1 = " + std::to_string(a - 1));
    if (std::gcd(a, b) != 1) throw InternalError("weight parameters are not coprime");

    AbelianGroup A = make_group({L, L});

    // K = kernel of (x, y) -> (ax + by, bx + ay) mod L, generated by the
    // columns of V scaled by L / gcd(d_i, L) where U diag(d_i) V is the form
    // matrix in Smith normal form.
    SmithResult snf = smith_normal_form({{Int(a), Int(b)}, {Int(b), Int(a)}});
    SubgroupPresentation K;
    for (int i = 0; i < 2; ++i) {
        long long d = snf.D[i][i].convert_to<long long>();
        long long scale = L / std::gcd(d, L);
        GroupElement g = reduce_element(A, {snf.V[0][i].convert_to<long long>() * scale,
                                            snf.V[1][i].convert_to<long long>() * scale});
        if ((a * g.c[0] + b * g.c[1]) % L != 0 || (b * g.c[0] + a * g.c[1]) % L != 0)
            throw InternalError("kernel generator is not annihilated by the form");
        K.gens.push_back(g);
    }
    std::vector<GroupElement> K_elements = subgroup_elements(A, K, bound);
    data.kernel_size = static_cast<long long>(K_elements.size());
    if (data.kernel_size != std::gcd(a * a - b * b, L) && data.kernel_size != std::gcd(b * b - a * a, L))
        throw InternalError("kernel size disagrees with gcd(a^2 - b^2, L)");

    QuotientData Q = quotient(A, K, bound);
    data.fiber_size = L / data.kernel_size;
    long long euler = data.fiber_size * (a - 1);
    if (euler % 2 != 0) throw InternalError("odd total vanishing order");
    data.genus = euler / 2 + 1;
    data.stratum = stratum_from_weights({a - 1}, {data.fiber_size});

    Automorphism h1 = induced_automorphism(Q, make_automorphism(A, {{-1, 0}, {0, -1}}), K_elements);
    Automorphism h2 = induced_automorphism(Q, make_automorphism(A, {{0, 1}, {1, 0}}), K_elements);
    Automorphism h3 = induced_automorphism(Q, make_automorphism(A, {{0, -1}, {-1, 0}}), K_elements);
    data.G = make_semidirect(Q.q, {h1, h2, h3}, bound);
    if (data.G.H.size() != 4) throw InternalError("symmetry group is not Klein four");

    GroupElement x1 = Q.project(reduce_element(A, {1, 0}));
    data.sigma.entries = {{x1, 0},
                          {neg(Q.q, x1), data.G.index_of(h1)},
                          {zero_element(Q.q), data.G.index_of(h2)},
                          {zero_element(Q.q), data.G.index_of(h3)}};
    data.sigma.ell = 1;
    validate_tuple(data.G, data.sigma, bound);

    // The descended weight character sends (x, y) + K to zeta_L^(ax + by).
    long long eq = Q.q.exponent();
    GroupElement probes[2] = {x1, Q.project(reduce_element(A, {0, 1}))};
    long long targets[2] = {a, b};
    std::optional<Character> descended;
    for (const Character& psi : all_characters(Q.q, bound)) {
        bool match = true;
        for (int j = 0; j < 2 && match; ++j)
            match = character_exponent(Q.q, psi, probes[j]) * L == targets[j] * eq;
        if (match) {
            descended = psi;
            break;
        }
    }
    if (!descended) throw InternalError("descended weight character not found");

    std::vector<CharacterOrbit> orbits = character_orbits(data.G, bound);
    bool located = false;
    for (size_t i = 0; i < orbits.size() && !located; ++i) {
        const auto& mem = orbits[i].members;
        if (std::find(mem.begin(), mem.end(), *descended) != mem.end()) {
            data.orbit_index = i;
            located = true;
        }
    }
    if (!located) throw InternalError("orbit of the descended character not found");
    return data;
}

PolygonData dihedral_from_polygon(const std::vector<long long>& angles, long long bound) {
    if (angles.size() < 3) throw InputError("a polygon needs at least three angles");
    for (long long v : angles)
        if (v <= 0) throw InputError("angles must be positive");
    for (size_t i = 0; i + 1 < angles.size(); ++i)
        if (angles[i] > angles[i + 1]) throw InputError("angles must be nondecreasing");

    long long m = static_cast<long long>(angles.size());
    long long sum = std::accumulate(angles.begin(), angles.end(), 0LL);
    if (sum % (m - 2) != 0)
        throw InputError("angle sum " + std::to_string(sum) + " is not divisible by " +
                         std::to_string(m - 2));
    long long N = sum / (m - 2);
    if (N < 3) throw InputError("angle denominator N = " + std::to_string(N) + " is too small");

    PolygonData data;
    data.angles = angles;
    data.N = N;
    AbelianGroup A = make_group({N});
    Automorphism inv = make_automorphism(A, {{-1}});
    data.G = make_semidirect(A, {inv}, bound);
    int t = data.G.index_of(inv);

    std::vector<GElement> raw;
    for (long long ai : angles) {
        bool refl = ai == 1 || (ai == 2 && N % 2 == 0);
        data.reflected.push_back(refl);
        GroupElement r = reduce_element(A, {ai});
        if (refl) {
            raw.push_back({r, t});
            raw.push_back({zero_element(A), t});
        } else {
            raw.push_back({r, 0});
        }
    }
    data.sigma = normalize_tuple(data.G, raw);
    validate_tuple(data.G, data.sigma, bound);
    return data;
}

long long dihedral_mk_fast(const SemidirectGroup& G, const GeneratingTuple& sigma, long long k) {
    long long N = dihedral_order(G);
    if (k < 1 || 2 * k > N) throw InputError("k must lie between 1 and N/2");
    if ((2 * k) % N == 0) throw InputError("the orbit of chi_k is not two-dimensional");

    long long n = static_cast<long long>(sigma.entries.size());
    long long reflections = 0, killed = 0;
    for (const GElement& x : sigma.entries) {
        if (x.h != 0)
            ++reflections;
        else if ((k * x.a.c[0]) % N == 0)
            ++killed;
    }
    return 2 * (n - 2) - reflections - 2 * killed;
}

DihedralConditions dihedral_sufficient_conditions(const SemidirectGroup& G,
                                                  const GeneratingTuple& sigma) {
    long long N = dihedral_order(G);
    bool all_at_least_4 = true, all_at_least_2 = true;
    for (long long k = 1; 2 * k < N; ++k) {
        if (std::gcd(k, N) != 1) continue;
        long long mk = dihedral_mk_fast(G, sigma, k);
        all_at_least_4 = all_at_least_4 && mk >= 4;
        all_at_least_2 = all_at_least_2 && mk >= 2;
    }
    DihedralConditions out;
    out.condition1 = N > 4 && N != 6 && all_at_least_4;
    out.condition2 = N > 8 && N != 10 && all_at_least_2;
    return out;
}

namespace {

struct TableRow {
    const char* label;
    std::vector<long long> angles;
    long long N;
    const char* stratum;
    std::vector<long long> residues;
    long long modulus, rank, rel;
    bool assumed;
};

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {"(1,1,7)", {1, 1, 7}, 9, "H(6)", {1, 6}, 9, 1, 0, false},
        {"(1,1,9)", {1, 1, 9}, 11, "H(8)", {1, 8}, 11, 1, 0, false},
        {"(1,1,11)", {1, 1, 11}, 13, "H(10)", {1, 10}, 13, 1, 0, false},
        {"(1,2,11)", {1, 2, 11}, 14, "H(10)", {2, 10}, 14, 1, 0, false},
        {"(1,2,13)", {1, 2, 13}, 16, "H(12)", {2, 12}, 16, 1, 0, false},
        {"(1,2,17)", {1, 2, 17}, 20, "H(16)", {2, 16}, 20, 1, 0, false},
        {"(1,1,12)", {1, 1, 12}, 14, "H(5^2)", {0, 5}, 7, 1, 0, false},
        {"(1,1,16)", {1, 1, 16}, 18, "H(7^2)", {0, 7}, 9, 1, 0, false},
        {"(1,1,20)", {1, 1, 20}, 22, "H(9^2)", {0, 9}, 11, 1, 0, false},
        {"(1,1,1,7)", {1, 1, 1, 7}, 5, "H(6)", {1, 2}, 5, 2, 0, false},
        {"(1,1,1,9)", {1, 1, 1, 9}, 6, "H(2^3)", {0}, 2, 2, 0, false},
        {"(1,1,2,12)", {1, 1, 2, 12}, 8, "H(2^4)", {0}, 2, 2, 0, false},
        {"(1,2,2,11)", {1, 2, 2, 11}, 8, "H(10)", {2, 4}, 8, 2, 0, false},
        {"(1,2,2,15)", {1, 2, 2, 15}, 10, "H(2^5)", {0}, 2, 2, 0, false},
        {"(1,1,2,8)", {1, 1, 2, 8}, 6, "H(3^2)", {0, 1}, 3, 2, 0, true},
        {"(1,1,2,2,12)", {1, 1, 2, 2, 12}, 6, "H(1^6)", {0}, 1, 2, 2, true},
    };
    return rows;
}

}  // namespace

std::vector<TableReport> reproduce_tables(long long bound) {
    std::vector<TableReport> out;
    for (const TableRow& row : table_rows()) {
        PolygonData poly = dihedral_from_polygon(row.angles, bound);
        CertifyOptions options;
        options.bound = bound;
        options.assume_d1_zero = row.assumed;
        Certificate cert = certify_algorithm2(poly.G, poly.sigma, 1, options);
        std::vector<CharacterOrbit> orbits = character_orbits(poly.G, bound);
        GroupElement g1 = poly.sigma.entries[0].a;

        TableReport rep;
        rep.label = row.label;
        rep.angles = row.angles;
        rep.N = poly.N;
        rep.stratum = stratum_string(cert.stratum);
        rep.residues = lambda_residues(poly.G, orbits[1], g1);
        rep.modulus = element_order(poly.G.A, g1);
        rep.rank = cert.rank;
        rep.rel = cert.rel;
        rep.assumed = row.assumed;

        auto fail = [&](const std::string& field, const std::string& want, const std::string& got) {
            throw InternalError("table row " + rep.label + ": " + field + " expected " + want +
                                ", got " + got);
        };
        if (!cert.passed) fail("verdict", "pass", "fail");
        if (rep.N != row.N) fail("N", std::to_string(row.N), std::to_string(rep.N));
        if (rep.stratum != row.stratum) fail("stratum", row.stratum, rep.stratum);
        if (rep.residues != row.residues) fail("residues", join(row.residues), join(rep.residues));
        if (rep.modulus != row.modulus)
            fail("modulus", std::to_string(row.modulus), std::to_string(rep.modulus));
        if (rep.rank != row.rank) fail("rank", std::to_string(row.rank), std::to_string(rep.rank));
        if (rep.rel != row.rel) fail("rel", std::to_string(row.rel), std::to_string(rep.rel));
        out.push_back(rep);
    }
    return out;
}

SearchResult search_dihedral(long long maxN, long long maxVertices,
                             const CertifyOptions& options) {
    SearchResult res;
    std::set<std::tuple<long long, std::string, long long, long long, long long>> seen;

    auto consider = [&](const std::vector<long long>& angles, long long sum, long long m) {
        ++res.tuples_seen;
        if (sum % (m - 2) != 0) {
            ++res.skipped_non_integral;
            return;
        }
        if (sum / (m - 2) < 3) {
            ++res.skipped_small_N;
            return;
        }
        PolygonData poly;
        try {
            poly = dihedral_from_polygon(angles, options.bound);
        } catch (const InputError&) {
            ++res.skipped_not_generating;
            return;
        } catch (const LimitError&) {
            ++res.resource_limited;
            return;
        }
        Certificate cert;
        try {
            CertifyOptions local = options;
            local.assume_d1_zero = false;
            cert = certify_algorithm2(poly.G, poly.sigma, 1, local);
            ++res.certified;
        } catch (const LimitError&) {
            ++res.resource_limited;
            return;
        }
        if (!cert.passed) return;
        ++res.passed;
        auto key = std::make_tuple(poly.N, stratum_string(cert.stratum), cert.rank, cert.rel,
                                   cert.field_degree);
        if (seen.insert(key).second) res.hits.push_back({angles, poly.N, std::move(cert)});
    };

    for (long long m = 3; m <= maxVertices; ++m) {
        long long cap = maxN * (m - 2);
        std::vector<long long> angles;
        auto rec = [&](auto&& self, long long lo, long long sum) -> void {
            long long pos = static_cast<long long>(angles.size());
            if (pos == m) {
                consider(angles, sum, m);
                return;
            }
            for (long long v = lo; sum + v * (m - pos) <= cap; ++v) {
                angles.push_back(v);
                self(self, v, sum + v);
                angles.pop_back();
            }
        };
        rec(rec, 1, 0);
    }
    return res;
}

}  // namespace occ
