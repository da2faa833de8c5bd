#include "occ/cyclotomic.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "occ/errors.hpp"

namespace occ {

namespace {

// Exact quotient a / b for monic b; throws if the division leaves a remainder.
std::vector<Int> poly_divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
    size_t db = b.size() - 1;
    std::vector<Int> q(a.size() > db ? a.size() - db : 0, 0);
    for (size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        Int coef = a[i];
        q[i - db] = coef;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
    }
    for (const Int& v : a)
        if (v != 0) throw InternalError("cyclotomic polynomial division left a remainder");
    return q;
}

std::vector<Rational> reduce_mod_phi(long long e, std::vector<Rational> a) {
    std::vector<Int> phi_poly = cyclotomic_polynomial(e);
    size_t deg = phi_poly.size() - 1;
    for (size_t i = a.size(); i-- > deg;) {
        if (a[i] == 0) continue;
        Rational coef = a[i];
        for (size_t j = 0; j <= deg; ++j) a[i - deg + j] -= coef * Rational(phi_poly[j]);
    }
    a.resize(deg, Rational(0));
    return a;
}

void set_mpz_from_int(mpz_t z, const Int& v) {
    mpz_set_str(z, v.str().c_str(), 10);
}

// [lo, hi] enclosing r.
void rational_to_interval(const Rational& r, mpfr_t lo, mpfr_t hi) {
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    set_mpz_from_int(num, numerator(r));
    set_mpz_from_int(den, denominator(r));
    mpfr_set_z(lo, num, MPFR_RNDD);
    mpfr_div_z(lo, lo, den, MPFR_RNDD);
    mpfr_set_z(hi, num, MPFR_RNDU);
    mpfr_div_z(hi, hi, den, MPFR_RNDU);
    mpz_clear(num);
    mpz_clear(den);
}

// Enclosure of sum_j c_j * trig(2 pi j / e) with trig = cos or sin, written
// into lo, hi (which fix the working precision).
void eval_trig_sum(const Cyclotomic& x, bool use_cos, mpfr_t lo, mpfr_t hi) {
    mpfr_prec_t p = mpfr_get_prec(lo);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    mpfr_t alo, ahi, t1, t2, w, tlo, thi;
    mpfr_inits2(p, alo, ahi, t1, t2, w, tlo, thi, static_cast<mpfr_ptr>(nullptr));
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    for (size_t j = 0; j < x.c.size(); ++j) {
        const Rational& cj = x.c[j];
        if (cj == 0) continue;
        if (j == 0) {
            if (use_cos) {
                rational_to_interval(cj, tlo, thi);
            } else {
                mpfr_set_zero(tlo, 1);
                mpfr_set_zero(thi, 1);
            }
        } else {
            mpfr_const_pi(alo, MPFR_RNDD);
            mpfr_mul_si(alo, alo, 2 * static_cast<long>(j), MPFR_RNDD);
            mpfr_div_si(alo, alo, static_cast<long>(x.e), MPFR_RNDD);
            mpfr_const_pi(ahi, MPFR_RNDU);
            mpfr_mul_si(ahi, ahi, 2 * static_cast<long>(j), MPFR_RNDU);
            mpfr_div_si(ahi, ahi, static_cast<long>(x.e), MPFR_RNDU);
            // trig([a,b]) lies within the endpoint values widened by b - a,
            // since the derivative is bounded by 1 in absolute value.
            mpfr_sub(w, ahi, alo, MPFR_RNDU);
            if (use_cos) {
                mpfr_cos(t1, alo, MPFR_RNDD);
                mpfr_cos(t2, ahi, MPFR_RNDD);
            } else {
                mpfr_sin(t1, alo, MPFR_RNDD);
                mpfr_sin(t2, ahi, MPFR_RNDD);
            }
            mpfr_min(tlo, t1, t2, MPFR_RNDD);
            mpfr_sub(tlo, tlo, w, MPFR_RNDD);
            if (use_cos) {
                mpfr_cos(t1, alo, MPFR_RNDU);
                mpfr_cos(t2, ahi, MPFR_RNDU);
            } else {
                mpfr_sin(t1, alo, MPFR_RNDU);
                mpfr_sin(t2, ahi, MPFR_RNDU);
            }
            mpfr_max(thi, t1, t2, MPFR_RNDU);
            mpfr_add(thi, thi, w, MPFR_RNDU);
            // Scale [tlo, thi] by the rational coefficient.
            set_mpz_from_int(num, numerator(cj));
            set_mpz_from_int(den, denominator(cj));
            if (cj > 0) {
                mpfr_mul_z(tlo, tlo, num, MPFR_RNDD);
                mpfr_div_z(tlo, tlo, den, MPFR_RNDD);
                mpfr_mul_z(thi, thi, num, MPFR_RNDU);
                mpfr_div_z(thi, thi, den, MPFR_RNDU);
            } else {
                mpfr_swap(tlo, thi);
                mpfr_mul_z(tlo, tlo, num, MPFR_RNDD);
                mpfr_div_z(tlo, tlo, den, MPFR_RNDD);
                mpfr_mul_z(thi, thi, num, MPFR_RNDU);
                mpfr_div_z(thi, thi, den, MPFR_RNDU);
            }
        }
        mpfr_add(lo, lo, tlo, MPFR_RNDD);
        mpfr_add(hi, hi, thi, MPFR_RNDU);
    }
    mpz_clear(num);
    mpz_clear(den);
    mpfr_clears(alo, ahi, t1, t2, w, tlo, thi, static_cast<mpfr_ptr>(nullptr));
}

// Midpoint estimate, round-to-nearest throughout; for display only.
std::string trig_sum_decimal(const Cyclotomic& x, bool use_cos, int sig) {
    mpfr_prec_t p = std::max(128, sig * 7);
    mpfr_t acc, term, angle;
    mpfr_inits2(p, acc, term, angle, static_cast<mpfr_ptr>(nullptr));
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    mpfr_set_zero(acc, 1);
    for (size_t j = 0; j < x.c.size(); ++j) {
        const Rational& cj = x.c[j];
        if (cj == 0) continue;
        if (j == 0) {
            if (!use_cos) continue;
            mpfr_set_si(term, 1, MPFR_RNDN);
        } else {
            mpfr_const_pi(angle, MPFR_RNDN);
            mpfr_mul_si(angle, angle, 2 * static_cast<long>(j), MPFR_RNDN);
            mpfr_div_si(angle, angle, static_cast<long>(x.e), MPFR_RNDN);
            if (use_cos)
                mpfr_cos(term, angle, MPFR_RNDN);
            else
                mpfr_sin(term, angle, MPFR_RNDN);
        }
        set_mpz_from_int(num, numerator(cj));
        set_mpz_from_int(den, denominator(cj));
        mpfr_mul_z(term, term, num, MPFR_RNDN);
        mpfr_div_z(term, term, den, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    std::string out;
    {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*Re", sig - 1, acc);
        out = buf;
    }
    mpz_clear(num);
    mpz_clear(den);
    mpfr_clears(acc, term, angle, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace

long long euler_phi(long long e) {
    if (e < 1) throw InputError("order must be positive");
    long long result = e, n = e;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Int> cyclotomic_polynomial(long long e) {
    if (e < 1) throw InputError("order must be positive");
    static std::mutex mu;
    static std::map<long long, std::vector<Int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    std::vector<long long> divs;
    for (long long d = 1; d * d <= e; ++d)
        if (e % d == 0) {
            divs.push_back(d);
            if (d != e / d) divs.push_back(e / d);
        }
    std::sort(divs.begin(), divs.end());
    for (long long d : divs) {
        if (cache.count(d)) continue;
        std::vector<Int> p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (long long dd : divs)
            if (dd < d && d % dd == 0) p = poly_divide_exact(std::move(p), cache.at(dd));
        cache.emplace(d, std::move(p));
    }
    return cache.at(e);
}

Cyclotomic cyclo_zero() { return Cyclotomic{1, {Rational(0)}}; }

Cyclotomic cyclo_from_rational(const Rational& r) { return Cyclotomic{1, {r}}; }

Cyclotomic cyclo_root(long long e, long long k) {
    if (e < 1) throw InputError("order must be positive");
    k %= e;
    if (k < 0) k += e;
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return make_cyclotomic(e, std::move(c));
}

Cyclotomic make_cyclotomic(long long e, std::vector<Rational> coeffs) {
    if (e < 1) throw InputError("order must be positive");
    return Cyclotomic{e, reduce_mod_phi(e, std::move(coeffs))};
}

Cyclotomic lift_to_order(const Cyclotomic& x, long long E) {
    if (E < 1 || E % x.e != 0) throw InputError("target order is not a multiple of the value order");
    if (E == x.e) return x;
    long long step = E / x.e;
    std::vector<Rational> c(static_cast<size_t>((x.c.size() - 1) * step) + 1, Rational(0));
    for (size_t j = 0; j < x.c.size(); ++j) c[j * step] = x.c[j];
    return make_cyclotomic(E, std::move(c));
}

Cyclotomic cyclo_add(const Cyclotomic& x, const Cyclotomic& y) {
    long long E = std::lcm(x.e, y.e);
    Cyclotomic a = lift_to_order(x, E), b = lift_to_order(y, E);
    for (size_t j = 0; j < a.c.size(); ++j) a.c[j] += b.c[j];
    return a;
}

Cyclotomic cyclo_sub(const Cyclotomic& x, const Cyclotomic& y) {
    return cyclo_add(x, cyclo_neg(y));
}

Cyclotomic cyclo_mul(const Cyclotomic& x, const Cyclotomic& y) {
    long long E = std::lcm(x.e, y.e);
    Cyclotomic a = lift_to_order(x, E), b = lift_to_order(y, E);
    std::vector<Rational> prod(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) prod[i + j] += a.c[i] * b.c[j];
    }
    return make_cyclotomic(E, std::move(prod));
}

Cyclotomic cyclo_neg(const Cyclotomic& x) {
    Cyclotomic y = x;
    for (auto& v : y.c) v = -v;
    return y;
}

Cyclotomic cyclo_scale(const Rational& r, const Cyclotomic& x) {
    Cyclotomic y = x;
    for (auto& v : y.c) v *= r;
    return y;
}

bool cyclo_equal(const Cyclotomic& x, const Cyclotomic& y) {
    long long E = std::lcm(x.e, y.e);
    return lift_to_order(x, E).c == lift_to_order(y, E).c;
}

bool cyclo_is_zero(const Cyclotomic& x) {
    return std::all_of(x.c.begin(), x.c.end(), [](const Rational& v) { return v == 0; });
}

Cyclotomic galois(const Cyclotomic& x, long long k) {
    long long kk = k % x.e;
    if (kk < 0) kk += x.e;
    if (std::gcd(kk, x.e) != 1)
        throw InputError("Galois exponent is not coprime to the order");
    std::vector<Rational> c(static_cast<size_t>(x.e), Rational(0));
    for (size_t j = 0; j < x.c.size(); ++j)
        c[static_cast<size_t>(static_cast<long long>(j) * kk % x.e)] += x.c[j];
    return make_cyclotomic(x.e, std::move(c));
}

Cyclotomic cyclo_conj(const Cyclotomic& x) { return galois(x, x.e - 1); }

Cyclotomic abs_squared(const Cyclotomic& x) { return cyclo_mul(x, cyclo_conj(x)); }

std::optional<Rational> as_rational(const Cyclotomic& x) {
    for (size_t j = 1; j < x.c.size(); ++j)
        if (x.c[j] != 0) return std::nullopt;
    return x.c[0];
}

Ordering compare_real(const Cyclotomic& x, const Cyclotomic& y, long long precision_cap) {
    Cyclotomic d = cyclo_sub(x, y);
    if (!cyclo_equal(cyclo_conj(d), d)) throw InputError("compared values are not real");
    if (auto r = as_rational(d)) {
        if (*r > 0) return Ordering::Greater;
        if (*r < 0) return Ordering::Less;
        return Ordering::Equal;
    }
    for (long long p = 64; p <= precision_cap; p *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(static_cast<mpfr_prec_t>(p), lo, hi, static_cast<mpfr_ptr>(nullptr));
        eval_trig_sum(d, true, lo, hi);
        int slo = mpfr_sgn(lo), shi = mpfr_sgn(hi);
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (slo > 0) return Ordering::Greater;
        if (shi < 0) return Ordering::Less;
    }
    throw LimitError("interval comparison still straddles zero at " +
                     std::to_string(precision_cap) + " bits");
}

std::string cyclo_decimal(const Cyclotomic& x, int significant_digits) {
    if (significant_digits < 2 || significant_digits > 50)
        throw InputError("significant digit count out of range");
    bool real = cyclo_equal(cyclo_conj(x), x);
    std::string re = trig_sum_decimal(x, true, significant_digits);
    if (real) return re;
    std::string im = trig_sum_decimal(x, false, significant_digits);
    if (!im.empty() && im[0] == '-') return re + " - " + im.substr(1) + "i";
    return re + " + " + im + "i";
}

long long field_degree_of_sums(long long e, const std::vector<Cyclotomic>& values) {
    if (e < 1) throw InputError("order must be positive");
    long long E = e;
    for (const auto& v : values) E = std::lcm(E, v.e);
    std::vector<Cyclotomic> lifted;
    lifted.reserve(values.size());
    for (const auto& v : values) lifted.push_back(lift_to_order(v, E));
    long long total = 0, stab = 0;
    for (long long k = 1; k <= E; ++k) {
        if (std::gcd(k, E) != 1) continue;
        ++total;
        bool fixes = true;
        for (const auto& v : lifted)
            if (!cyclo_equal(galois(v, k), v)) {
                fixes = false;
                break;
            }
        if (fixes) ++stab;
    }
    return total / stab;
}

}  // namespace occ
