#include "occ/certify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "occ/errors.hpp"

namespace occ {

namespace {

std::string element_str(const GroupElement& x) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < x.c.size(); ++i) os << (i ? "," : "") << x.c[i];
    os << ')';
    return os.str();
}

std::string list_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string value_str(const Cyclotomic& x) {
    if (auto q = as_rational(x)) {
        std::ostringstream os;
        os << *q;
        return os.str();
    }
    return cyclo_decimal(x) + " (approximate)";
}

// Smallest positive n with chi(a) = zeta_{|a|}^n.
long long least_positive_exponent(const AbelianGroup& A, const Character& chi,
                                  const GroupElement& a) {
    long long N = element_order(A, a);
    long long cof = A.exponent() / N;
    long long t = character_exponent(A, chi, a);
    if (t % cof != 0) throw InternalError("character value is not an |a|-th root of unity");
    long long s = (t / cof) % N;
    return s == 0 ? N : s;
}

struct WitnessScan {
    std::optional<GroupElement> element;
    std::optional<Cyclotomic> sum;
    bool greater = false;
};

// First element with trivial stabilizer whose intersection sum exceeds 2, or
// the largest sum seen when none does.
WitnessScan scan_witness(const SemidirectGroup& G, const IsotypicTable& table,
                         const CertifyOptions& options) {
    WitnessScan best;
    Cyclotomic two = cyclo_from_rational(Rational(2));
    for (const GroupElement& a : enumerate_elements(G.A, options.bound)) {
        if (stabilizer_size(G, a) != 1) continue;
        Cyclotomic s = intersection_sum(G, table, a);
        if (compare_real(s, two, options.precision_cap) == Ordering::Greater) {
            best.element = a;
            best.sum = s;
            best.greater = true;
            return best;
        }
        if (!best.sum || compare_real(s, *best.sum, options.precision_cap) == Ordering::Greater) {
            best.element = a;
            best.sum = s;
        }
    }
    return best;
}

Condition witness_condition(const WitnessScan& scan, bool required) {
    Condition c{"intersection test", scan.greater, required, ""};
    if (scan.greater)
        c.detail = "sum " + value_str(*scan.sum) + " > 2 at a = " + element_str(*scan.element);
    else if (scan.sum)
        c.detail = "no sum above 2; best is " + value_str(*scan.sum) + " at a = " +
                   element_str(*scan.element);
    else
        c.detail = "no element with trivial stabilizer";
    return c;
}

std::vector<long long> prefix_fiber_sizes(const SemidirectGroup& G, const GeneratingTuple& sigma) {
    std::vector<long long> sizes;
    for (int i = 0; i < sigma.ell; ++i)
        sizes.push_back(G.A.order() / element_order(G.A, sigma.entries[i].a));
    return sizes;
}

// Shared guards for both certifiers: conjugation closure and a nonzero even
// multiplicity.
void push_orbit_conditions(Certificate& cert, const CharacterOrbit& orbit, long long m1) {
    bool closed = orbit.conj_closed && !orbit.is_trivial;
    cert.conditions.push_back({"orbit closed under conjugation", closed, true,
                               "orbit size " + std::to_string(orbit.members.size())});
    cert.conditions.push_back(
        {"nonzero multiplicity", m1 != 0, true, "multiplicity " + std::to_string(m1)});
    if (closed && m1 % 2 != 0)
        throw InternalError("conjugation-closed orbit with odd multiplicity");
}

void enforce_certificate_invariants(const Certificate& cert, long long n) {
    if (!cert.passed) return;
    long long total = 0;
    for (auto [order, count] : cert.stratum.orders) total += order * count;
    if (total != 2 * cert.genus - 2)
        throw InternalError("certified stratum does not match the genus");
    if (cert.rank < 1 || cert.rel < 0) throw InternalError("certified rank or rel out of range");
    if (2 * cert.rank + cert.rel > n + cert.rank - 3 - cert.tokens_spent)
        throw InternalError("certified dimension exceeds the budget");
}

}  // namespace

StratumSignature stratum_from_weights(const std::vector<long long>& kappa,
                                      const std::vector<long long>& fiber_sizes) {
    std::map<long long, long long, std::greater<>> agg;
    for (size_t i = 0; i < kappa.size(); ++i) agg[kappa[i]] += fiber_sizes[i];
    StratumSignature s;
    for (auto [order, count] : agg) s.orders.emplace_back(order, count);
    return s;
}

std::string stratum_string(const StratumSignature& s) {
    std::ostringstream os;
    os << "H(";
    for (size_t i = 0; i < s.orders.size(); ++i) {
        if (i) os << ", ";
        os << s.orders[i].first;
        if (s.orders[i].second != 1) os << '^' << s.orders[i].second;
    }
    os << ')';
    return os.str();
}

MergeResult default_merge(const SemidirectGroup& G, const GeneratingTuple& sigma) {
    long long n = static_cast<long long>(sigma.entries.size());
    if ((n - sigma.ell) % 2 != 0)
        throw InputError("cannot merge an odd number of entries outside the base group");
    MergeResult out;
    for (int i = 0; i < sigma.ell; ++i) out.entries.push_back(sigma.entries[i].a);
    for (size_t i = sigma.ell; i < sigma.entries.size(); i += 2) {
        GElement p = g_mul(G, sigma.entries[i], sigma.entries[i + 1]);
        if (p.h != 0) throw InputError("merged pair product lies outside the base group");
        out.entries.push_back(p.a);
        ++out.n_comb;
    }
    std::vector<GroupElement> sub =
        subgroup_elements(G.A, SubgroupPresentation{out.entries}, G.A.order());
    if (static_cast<long long>(sub.size()) != G.A.order())
        throw InputError("merged entries do not generate the base group");
    out.d1_bound = n - static_cast<long long>(out.entries.size()) - out.n_comb;
    return out;
}

long long chevalley_weil_mult(const AbelianGroup& A, const std::vector<GroupElement>& sigma_prime,
                              const Character& chi) {
    if (is_trivial_character(chi)) return 0;
    Rational m(-1);
    for (const GroupElement& a : sigma_prime) {
        long long N = element_order(A, a);
        long long v = least_positive_exponent(A, chi, a);
        m += Rational(N - v, N);
    }
    if (denominator(m) != 1) throw InternalError("character multiplicity is not an integer");
    return m.convert_to<long long>();
}

std::optional<PartitionWitness> partition_check(const AbelianGroup& A,
                                               const std::vector<GroupElement>& merged,
                                               int ell, const std::vector<long long>& kappa,
                                               const CharacterOrbit& orbit) {
    if (static_cast<int>(kappa.size()) != ell)
        throw InputError("one weight per special entry is required");
    for (const Character& chi : orbit.members) {
        long long budget = chevalley_weil_mult(A, merged, chi) - 1;
        if (budget < 0) continue;
        std::vector<long long> order(ell), least(ell);
        for (int i = 0; i < ell; ++i) {
            order[i] = element_order(A, merged[i]);
            long long v = least_positive_exponent(A, chi, merged[i]);
            long long gap = kappa[i] - v + 1;
            least[i] = gap <= 0 ? 0 : (gap + order[i] - 1) / order[i];
        }
        std::vector<long long> tail_least(ell + 1, 0);
        for (int i = ell - 1; i >= 0; --i) tail_least[i] = tail_least[i + 1] + least[i];
        std::vector<long long> parts(ell, 0);
        std::function<bool(int, long long)> place = [&](int i, long long left) {
            if (i == ell) return left == 0;
            if (tail_least[i] > left) return false;
            for (long long o = least[i]; o <= left - tail_least[i + 1]; ++o) {
                parts[i] = o;
                if (place(i + 1, left - o)) return true;
            }
            return false;
        };
        if (place(0, budget)) return PartitionWitness{chi, budget + 1, parts};
    }
    return std::nullopt;
}

Certificate certify_main2(const SemidirectGroup& G, const GeneratingTuple& sigma,
                          size_t orbit_index, const CertifyOptions& options) {
    validate_tuple(G, sigma, options.bound);
    IsotypicTable table = isotypic_table(G, sigma, options.bound);
    if (orbit_index >= table.orbits.size()) throw InputError("orbit index out of range");
    const CharacterOrbit& orbit = table.orbits[orbit_index];

    Certificate cert;
    cert.algorithm = "main";
    cert.route = "direct";
    long long n = static_cast<long long>(sigma.entries.size());
    long long m1 = table.mult[orbit_index];
    bool flag = options.assume_d1_zero;
    if (flag) cert.assumptions.push_back("d1 = 0 (assumed, not verified)");
    push_orbit_conditions(cert, orbit, m1);

    cert.rank = m1 / 2;
    cert.rel = rel_count(G, orbit, sigma);
    cert.tokens = n - cert.rank - cert.rel - 3;
    cert.conditions.push_back({"dimension count", cert.tokens == 0, true,
                               "n - rank - rel - 3 = " + std::to_string(cert.tokens)});

    WitnessScan scan = scan_witness(G, table, options);
    cert.witness = scan.element;
    cert.witness_sum = scan.sum;
    cert.conditions.push_back(witness_condition(scan, !flag));

    for (int i = 0; i < sigma.ell; ++i)
        cert.kappa.push_back(lambda_sequence(G, orbit, sigma.entries[i].a, 1)[0]);
    cert.fiber_sizes = prefix_fiber_sizes(G, sigma);
    cert.conditions.push_back(
        {"fiber vanishing orders", true, true, "kappa = " + list_str(cert.kappa)});

    long long total = 2;
    for (size_t i = 0; i < cert.kappa.size(); ++i) total += cert.kappa[i] * cert.fiber_sizes[i];
    long long mult_sum = 0;
    for (long long m : table.mult) mult_sum += m;
    cert.conditions.push_back({"total vanishing order", total == mult_sum, true,
                               "2 + weighted kappa = " + std::to_string(total) +
                                   ", multiplicity sum = " + std::to_string(mult_sum)});

    cert.genus = table.genus;
    cert.stratum = stratum_from_weights(cert.kappa, cert.fiber_sizes);
    cert.passed = true;
    for (const Condition& c : cert.conditions) cert.passed = cert.passed && (c.passed || !c.required);
    if (cert.passed) cert.field_degree = field_of_definition(G, orbit).degree;
    enforce_certificate_invariants(cert, n);
    return cert;
}

Certificate certify_algorithm2(const SemidirectGroup& G, const GeneratingTuple& sigma,
                               size_t orbit_index, const CertifyOptions& options) {
    validate_tuple(G, sigma, options.bound);
    IsotypicTable table = isotypic_table(G, sigma, options.bound);
    if (orbit_index >= table.orbits.size()) throw InputError("orbit index out of range");
    const CharacterOrbit& orbit = table.orbits[orbit_index];

    Certificate cert;
    cert.algorithm = "general";
    long long n = static_cast<long long>(sigma.entries.size());
    long long m1 = table.mult[orbit_index];
    bool flag = options.assume_d1_zero;
    if (flag) cert.assumptions.push_back("d1 = 0 (assumed, not verified)");
    push_orbit_conditions(cert, orbit, m1);

    cert.rank = m1 / 2;
    cert.rel = rel_count(G, orbit, sigma);
    cert.tokens = n - cert.rank - cert.rel - 3;
    cert.fiber_sizes = prefix_fiber_sizes(G, sigma);

    GameOptions game_options{options.minimize_move2_cost, options.state_cap};
    bool game_ok = false;
    std::string game_detail;
    try {
        GameSpec spec = build_game(G, sigma, table, orbit_index, options.bound, game_options);
        cert.game = solve_game(spec, game_options);
        if (cert.game.won) {
            game_ok = true;
            cert.kappa = cert.game.final_weights;
            cert.tokens_spent = cert.game.tokens_spent;
            game_detail = "won at weights " + list_str(cert.kappa) + " spending " +
                          std::to_string(cert.tokens_spent) + " of " +
                          std::to_string(cert.tokens) + " tokens";
        } else {
            game_detail = cert.game.reason;
        }
    } catch (const InputError& e) {
        game_detail = e.what();
    }
    cert.conditions.push_back({"vanishing game", game_ok, true, game_detail});

    bool direct = game_ok && cert.tokens == 0;
    cert.route = direct ? "direct" : "merge";

    WitnessScan scan = scan_witness(G, table, options);
    cert.witness = scan.element;
    cert.witness_sum = scan.sum;
    cert.conditions.push_back(witness_condition(scan, !flag));

    std::optional<MergeResult> merge;
    bool merge_ok = false;
    std::string merge_detail;
    try {
        merge = default_merge(G, sigma);
        cert.merged = merge->entries;
        merge_ok = merge->d1_bound == 0;
        merge_detail = std::to_string(merge->entries.size()) + " entries, " +
                       std::to_string(merge->n_comb) + " merged, bound " +
                       std::to_string(merge->d1_bound);
    } catch (const InputError& e) {
        merge_detail = e.what();
    }
    cert.conditions.push_back({"merge bound", merge_ok, !flag && !direct, merge_detail});

    bool genus_ok = false;
    std::string genus_detail = "requires a merge";
    if (merge) {
        long long mult_sum = 0;
        for (long long m : table.mult) mult_sum += m;
        long long lhs = -2 + mult_sum;
        long long m = static_cast<long long>(merge->entries.size());
        long long rhs = (m - 2) * G.A.order();
        for (const GroupElement& a : merge->entries)
            rhs -= G.A.order() / element_order(G.A, a);
        genus_ok = lhs == rhs;
        genus_detail = "-2 + multiplicity sum = " + std::to_string(lhs) +
                       ", merged cover gives " + std::to_string(rhs);
    }
    cert.conditions.push_back({"merged genus equality", genus_ok, !direct, genus_detail});

    bool partition_ok = false;
    std::string partition_detail = merge ? "requires a won game" : "requires a merge";
    if (merge && game_ok) {
        cert.partition = partition_check(G.A, merge->entries, sigma.ell, cert.kappa, orbit);
        partition_ok = cert.partition.has_value();
        partition_detail = partition_ok
                               ? "zero distribution " + list_str(cert.partition->parts)
                               : "no orbit character can distribute its zeroes";
    }
    cert.conditions.push_back(
        {"eigenform vanishing distribution", partition_ok, !direct, partition_detail});

    bool orbit_ok = orbit.conj_closed && !orbit.is_trivial && m1 != 0;
    if (direct)
        cert.passed = orbit_ok && game_ok && (scan.greater || flag);
    else
        cert.passed = orbit_ok && game_ok && (flag || (scan.greater && merge_ok)) && genus_ok &&
                      partition_ok;

    cert.genus = table.genus;
    if (game_ok) cert.stratum = stratum_from_weights(cert.kappa, cert.fiber_sizes);
    if (cert.passed) cert.field_degree = field_of_definition(G, orbit).degree;
    enforce_certificate_invariants(cert, n);
    return cert;
}

}  // namespace occ
