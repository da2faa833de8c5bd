#include "occ/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "occ/errors.hpp"

namespace occ {

namespace {

long long mod_ll(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

long long mulmod_ll(long long a, long long b, long long n) {
    return static_cast<long long>(static_cast<__int128>(a) * b % n);
}

std::vector<std::vector<Int>> int_identity(size_t n) {
    std::vector<std::vector<Int>> I(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

std::vector<std::vector<Int>> int_mat_mul(const std::vector<std::vector<Int>>& A,
                                          const std::vector<std::vector<Int>>& B) {
    size_t r = A.size(), m = B.size(), c = B.empty() ? 0 : B[0].size();
    std::vector<std::vector<Int>> C(r, std::vector<Int>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < c; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

void check_matrix_shape(const std::vector<std::vector<Int>>& M) {
    if (M.empty() || M[0].empty()) throw InputError("matrix must be nonempty");
    for (const auto& row : M)
        if (row.size() != M[0].size()) throw InputError("matrix rows have unequal length");
}

}  // namespace

long long AbelianGroup::order() const {
    long long n = 1;
    for (long long f : factors) n *= f;
    return n;
}

AbelianGroup make_group(std::vector<long long> factors) {
    if (factors.empty()) throw InputError("invariant factor list must be nonempty");
    for (long long f : factors)
        if (f < 1) throw InputError("invariant factors must be positive");
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i + 1] % factors[i] != 0)
            throw InputError("invariant factors must form a divisibility chain");
    return AbelianGroup{std::move(factors)};
}

GroupElement reduce_element(const AbelianGroup& A, std::vector<long long> c) {
    if (c.size() != A.factors.size())
        throw InputError("element coordinate count does not match group rank");
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_ll(c[i], A.factors[i]);
    return GroupElement{std::move(c)};
}

GroupElement zero_element(const AbelianGroup& A) {
    return GroupElement{std::vector<long long>(A.factors.size(), 0)};
}

bool is_zero(const GroupElement& x) {
    return std::all_of(x.c.begin(), x.c.end(), [](long long v) { return v == 0; });
}

GroupElement add(const AbelianGroup& A, const GroupElement& x, const GroupElement& y) {
    GroupElement z = x;
    for (size_t i = 0; i < z.c.size(); ++i) z.c[i] = mod_ll(z.c[i] + y.c[i], A.factors[i]);
    return z;
}

GroupElement neg(const AbelianGroup& A, const GroupElement& x) {
    GroupElement z = x;
    for (size_t i = 0; i < z.c.size(); ++i) z.c[i] = mod_ll(-z.c[i], A.factors[i]);
    return z;
}

GroupElement sub(const AbelianGroup& A, const GroupElement& x, const GroupElement& y) {
    return add(A, x, neg(A, y));
}

GroupElement scalar_mul(const AbelianGroup& A, long long t, const GroupElement& x) {
    GroupElement z = x;
    for (size_t i = 0; i < z.c.size(); ++i)
        z.c[i] = mulmod_ll(mod_ll(t, A.factors[i]), z.c[i], A.factors[i]);
    return z;
}

long long element_order(const AbelianGroup& A, const GroupElement& x) {
    long long ord = 1;
    for (size_t i = 0; i < x.c.size(); ++i) {
        long long oi = A.factors[i] / std::gcd(A.factors[i], x.c[i]);
        ord = std::lcm(ord, oi);
    }
    return ord;
}

long long element_index(const AbelianGroup& A, const GroupElement& x) {
    long long idx = 0;
    for (size_t i = 0; i < x.c.size(); ++i) idx = idx * A.factors[i] + x.c[i];
    return idx;
}

GroupElement element_at(const AbelianGroup& A, long long index) {
    if (index < 0 || index >= A.order()) throw InputError("element index out of range");
    std::vector<long long> c(A.factors.size());
    for (size_t i = c.size(); i-- > 0;) {
        c[i] = index % A.factors[i];
        index /= A.factors[i];
    }
    return GroupElement{std::move(c)};
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& A, long long bound) {
    if (A.order() > bound)
        throw LimitError("group order " + std::to_string(A.order()) +
                         " exceeds enumeration bound " + std::to_string(bound));
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(A.order()));
    for (long long i = 0; i < A.order(); ++i) out.push_back(element_at(A, i));
    return out;
}

Automorphism make_automorphism(const AbelianGroup& A, const std::vector<std::vector<long long>>& m) {
    size_t k = A.factors.size();
    if (m.size() != k) throw InputError("automorphism matrix has wrong row count");
    for (const auto& row : m)
        if (row.size() != k) throw InputError("automorphism matrix has wrong column count");
    Automorphism f;
    f.m.assign(k, std::vector<long long>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) f.m[i][j] = mod_ll(m[i][j], A.factors[i]);
    // Well-defined iff n_j * m[i][j] = 0 mod n_i; automatic for j >= i.
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < i; ++j)
            if (mulmod_ll(mod_ll(A.factors[j], A.factors[i]), f.m[i][j], A.factors[i]) != 0)
                throw InputError("matrix does not define a homomorphism of the group");
    // Surjective (hence bijective) iff coker of [M | diag(n)] is trivial.
    std::vector<std::vector<Int>> B(k, std::vector<Int>(2 * k, 0));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) B[i][j] = f.m[i][j];
        B[i][k + i] = A.factors[i];
    }
    SmithResult s = smith_normal_form(B);
    for (size_t i = 0; i < k; ++i)
        if (s.D[i][i] != 1) throw InputError("matrix defines a non-bijective endomorphism");
    return f;
}

Automorphism identity_automorphism(const AbelianGroup& A) {
    size_t k = A.factors.size();
    Automorphism f;
    f.m.assign(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i) f.m[i][i] = mod_ll(1, A.factors[i]);
    return f;
}

GroupElement apply(const AbelianGroup& A, const Automorphism& f, const GroupElement& x) {
    size_t k = A.factors.size();
    std::vector<long long> y(k, 0);
    for (size_t i = 0; i < k; ++i) {
        __int128 acc = 0;
        for (size_t j = 0; j < k; ++j) acc += static_cast<__int128>(f.m[i][j]) * x.c[j];
        y[i] = static_cast<long long>(acc % A.factors[i]);
    }
    return GroupElement{std::move(y)};
}

Automorphism compose(const AbelianGroup& A, const Automorphism& f, const Automorphism& g) {
    size_t k = A.factors.size();
    Automorphism h;
    h.m.assign(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            __int128 acc = 0;
            for (size_t l = 0; l < k; ++l) acc += static_cast<__int128>(f.m[i][l]) * g.m[l][j];
            h.m[i][j] = static_cast<long long>(acc % A.factors[i]);
        }
    return h;
}

Character make_character(const AbelianGroup& A, std::vector<long long> d) {
    if (d.size() != A.factors.size())
        throw InputError("character coordinate count does not match group rank");
    for (size_t i = 0; i < d.size(); ++i) d[i] = mod_ll(d[i], A.factors[i]);
    return Character{std::move(d)};
}

long long character_exponent(const AbelianGroup& A, const Character& chi, const GroupElement& x) {
    long long e = A.exponent();
    long long t = 0;
    for (size_t i = 0; i < chi.d.size(); ++i) {
        long long a = mulmod_ll(e / A.factors[i], chi.d[i], e);
        t = (t + mulmod_ll(a, x.c[i], e)) % e;
    }
    return t;
}

Character conj_character(const AbelianGroup& A, const Character& chi) {
    Character c = chi;
    for (size_t i = 0; i < c.d.size(); ++i) c.d[i] = mod_ll(-c.d[i], A.factors[i]);
    return c;
}

Character character_after(const AbelianGroup& A, const Character& chi, const Automorphism& f) {
    size_t k = A.factors.size();
    long long e = A.exponent();
    std::vector<long long> d(k);
    for (size_t j = 0; j < k; ++j) {
        long long s = 0;
        for (size_t i = 0; i < k; ++i) {
            long long a = mulmod_ll(e / A.factors[i], chi.d[i], e);
            s = (s + mulmod_ll(a, f.m[i][j], e)) % e;
        }
        long long step = e / A.factors[j];
        if (s % step != 0)
            throw InternalError("pulled-back character exponent is not divisible by the cofactor");
        d[j] = (s / step) % A.factors[j];
    }
    return Character{std::move(d)};
}

bool is_trivial_character(const Character& chi) {
    return std::all_of(chi.d.begin(), chi.d.end(), [](long long v) { return v == 0; });
}

std::vector<Character> all_characters(const AbelianGroup& A, long long bound) {
    if (A.order() > bound)
        throw LimitError("character count " + std::to_string(A.order()) +
                         " exceeds enumeration bound " + std::to_string(bound));
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(A.order()));
    for (long long i = 0; i < A.order(); ++i) out.push_back(Character{element_at(A, i).c});
    return out;
}

SmithResult smith_normal_form(const std::vector<std::vector<Int>>& M) {
    check_matrix_shape(M);
    size_t r = M.size(), c = M[0].size();
    SmithResult s;
    s.D = M;
    s.U = int_identity(r);
    s.V = int_identity(c);

    auto row_swap = [&](size_t a, size_t b) {
        std::swap(s.D[a], s.D[b]);
        std::swap(s.U[a], s.U[b]);
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < r; ++i) std::swap(s.D[i][a], s.D[i][b]);
        for (size_t i = 0; i < c; ++i) std::swap(s.V[i][a], s.V[i][b]);
    };
    auto row_addmul = [&](size_t dst, size_t src, const Int& q) {
        for (size_t j = 0; j < c; ++j) s.D[dst][j] += q * s.D[src][j];
        for (size_t j = 0; j < r; ++j) s.U[dst][j] += q * s.U[src][j];
    };
    auto col_addmul = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < r; ++i) s.D[i][dst] += q * s.D[i][src];
        for (size_t i = 0; i < c; ++i) s.V[i][dst] += q * s.V[i][src];
    };

    size_t steps = 0, step_cap = 10000 * (r + c) * (r + c);
    for (size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            if (++steps > step_cap) throw InternalError("normal form reduction did not converge");
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            size_t pi = t, pj = t;
            bool found = false;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j)
                    if (s.D[i][j] != 0 &&
                        (!found || abs(s.D[i][j]) < abs(s.D[pi][pj]))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) goto done;
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool again = false;
            for (size_t i = t + 1; i < r; ++i)
                if (s.D[i][t] != 0) {
                    row_addmul(i, t, -(s.D[i][t] / s.D[t][t]));
                    if (s.D[i][t] != 0) again = true;
                }
            for (size_t j = t + 1; j < c; ++j)
                if (s.D[t][j] != 0) {
                    col_addmul(j, t, -(s.D[t][j] / s.D[t][t]));
                    if (s.D[t][j] != 0) again = true;
                }
            if (again) continue;

            // Force the divisibility chain: fold a bad row into the pivot row.
            bool fixed = false;
            for (size_t i = t + 1; i < r && !fixed; ++i)
                for (size_t j = t + 1; j < c && !fixed; ++j)
                    if (s.D[i][j] % s.D[t][t] != 0) {
                        row_addmul(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
done:
    for (size_t t = 0; t < std::min(r, c); ++t)
        if (s.D[t][t] < 0) {
            for (size_t j = 0; j < c; ++j) s.D[t][j] = -s.D[t][j];
            for (size_t j = 0; j < r; ++j) s.U[t][j] = -s.U[t][j];
        }
    if (int_mat_mul(int_mat_mul(s.U, M), s.V) != s.D)
        throw InternalError("normal form verification U*M*V == D failed");
    return s;
}

std::optional<std::vector<std::vector<Int>>> integer_inverse(const std::vector<std::vector<Int>>& M) {
    check_matrix_shape(M);
    size_t n = M.size();
    if (M[0].size() != n) throw InputError("matrix must be square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(M[i][j]);
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[col], a[piv]);
        Rational inv = Rational(1) / a[col][col];
        for (size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (denominator(v) != 1) return std::nullopt;
            out[i][j] = numerator(v);
        }
    return out;
}

Rational rational_determinant(const std::vector<std::vector<Int>>& M) {
    check_matrix_shape(M);
    size_t n = M.size();
    if (M[0].size() != n) throw InputError("matrix must be square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(M[i][j]);
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::vector<GroupElement> subgroup_elements(const AbelianGroup& A, const SubgroupPresentation& K,
                                            long long bound) {
    std::vector<GroupElement> gens;
    for (const auto& g : K.gens) gens.push_back(reduce_element(A, g.c));
    std::set<GroupElement> seen{zero_element(A)};
    std::vector<GroupElement> frontier{zero_element(A)};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElement y = add(A, x, g);
                if (seen.insert(y).second) {
                    if (static_cast<long long>(seen.size()) > bound)
                        throw LimitError("subgroup closure exceeds enumeration bound " +
                                         std::to_string(bound));
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return std::vector<GroupElement>(seen.begin(), seen.end());
}

GroupElement QuotientData::project(const GroupElement& x) const {
    if (x.c.size() != src.factors.size())
        throw InputError("element coordinate count does not match group rank");
    if (kept.empty()) return GroupElement{{0}};
    std::vector<long long> out(kept.size());
    for (size_t p = 0; p < kept.size(); ++p) {
        int i = kept[p];
        Int acc = 0;
        for (size_t j = 0; j < x.c.size(); ++j) acc += U[i][j] * x.c[j];
        Int m = acc % q.factors[p];
        if (m < 0) m += q.factors[p];
        out[p] = static_cast<long long>(m);
    }
    return GroupElement{std::move(out)};
}

QuotientData quotient(const AbelianGroup& A, const SubgroupPresentation& K, long long bound) {
    size_t k = A.factors.size();
    std::vector<GroupElement> K_elems = subgroup_elements(A, K, bound);

    std::vector<std::vector<Int>> B(k, std::vector<Int>(k + K.gens.size(), 0));
    for (size_t i = 0; i < k; ++i) B[i][i] = A.factors[i];
    for (size_t g = 0; g < K.gens.size(); ++g) {
        GroupElement red = reduce_element(A, K.gens[g].c);
        for (size_t i = 0; i < k; ++i) B[i][k + g] = red.c[i];
    }
    SmithResult s = smith_normal_form(B);

    QuotientData Q;
    Q.src = A;
    Q.U = s.U;
    auto inv = integer_inverse(s.U);
    if (!inv) throw InternalError("basis change matrix is not invertible over the integers");
    Q.U_inv = *inv;

    std::vector<long long> factors;
    for (size_t i = 0; i < k; ++i) {
        Int d = s.D[i][i];
        if (d == 0) throw InternalError("relation lattice is not of full rank");
        if (d > 1) {
            Q.kept.push_back(static_cast<int>(i));
            factors.push_back(static_cast<long long>(d));
        }
    }
    Q.q = factors.empty() ? make_group({1}) : make_group(std::move(factors));

    if (Q.q.order() * static_cast<long long>(K_elems.size()) != A.order())
        throw InternalError("quotient order times kernel order does not equal the group order");
    return Q;
}

Automorphism induced_automorphism(const QuotientData& Q, const Automorphism& f,
                                  const std::vector<GroupElement>& K_elements) {
    const AbelianGroup& A = Q.src;
    std::vector<GroupElement> K_sorted = K_elements;
    std::sort(K_sorted.begin(), K_sorted.end());
    for (const auto& x : K_sorted)
        if (!std::binary_search(K_sorted.begin(), K_sorted.end(), apply(A, f, x)))
            throw InputError("automorphism does not preserve the kernel");

    size_t k = A.factors.size();
    Automorphism ind;
    if (Q.kept.empty()) {
        ind = identity_automorphism(Q.q);
    } else {
        std::vector<std::vector<Int>> Mf(k, std::vector<Int>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) Mf[i][j] = f.m[i][j];
        std::vector<std::vector<Int>> N = int_mat_mul(int_mat_mul(Q.U, Mf), Q.U_inv);
        std::vector<std::vector<long long>> m(Q.kept.size(),
                                              std::vector<long long>(Q.kept.size()));
        for (size_t p = 0; p < Q.kept.size(); ++p)
            for (size_t r = 0; r < Q.kept.size(); ++r) {
                Int v = N[Q.kept[p]][Q.kept[r]] % Q.q.factors[p];
                if (v < 0) v += Q.q.factors[p];
                m[p][r] = static_cast<long long>(v);
            }
        try {
            ind = make_automorphism(Q.q, m);
        } catch (const InputError& e) {
            throw InternalError(std::string("induced map is not an automorphism: ") + e.what());
        }
    }
    // The induced map must intertwine the projection on a generating set.
    for (size_t j = 0; j < k; ++j) {
        std::vector<long long> e(k, 0);
        e[j] = 1;
        GroupElement b = reduce_element(A, e);
        if (Q.project(apply(A, f, b)) != apply(Q.q, ind, Q.project(b)))
            throw InternalError("induced automorphism does not commute with the projection");
    }
    return ind;
}

}  // namespace occ
