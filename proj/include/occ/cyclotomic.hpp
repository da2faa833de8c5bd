#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occ/abelian.hpp"

namespace occ {

// Element of Q(zeta_e) in the power basis 1, zeta, ..., zeta^(phi(e)-1),
// i.e. a polynomial in zeta_e reduced mod the e-th cyclotomic polynomial.
// The order e is carried along and is not required to be minimal; values of
// mixed order are lifted to the lcm before arithmetic.
struct Cyclotomic {
    long long e = 1;
    std::vector<Rational> c = {Rational(0)};
};

long long euler_phi(long long e);

// Coefficients of the e-th cyclotomic polynomial, ascending, degree phi(e).
std::vector<Int> cyclotomic_polynomial(long long e);

Cyclotomic cyclo_zero();
Cyclotomic cyclo_from_rational(const Rational& r);
// zeta_e^k
Cyclotomic cyclo_root(long long e, long long k);
// Polynomial sum_j coeffs[j] * zeta_e^j, any length, reduced.
Cyclotomic make_cyclotomic(long long e, std::vector<Rational> coeffs);

// Rewrites x in Q(zeta_E); requires e | E.
Cyclotomic lift_to_order(const Cyclotomic& x, long long E);

Cyclotomic cyclo_add(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic cyclo_sub(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic cyclo_mul(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic cyclo_neg(const Cyclotomic& x);
Cyclotomic cyclo_scale(const Rational& r, const Cyclotomic& x);
bool cyclo_equal(const Cyclotomic& x, const Cyclotomic& y);
bool cyclo_is_zero(const Cyclotomic& x);

// Galois action zeta -> zeta^k; requires gcd(k, e) = 1.
Cyclotomic galois(const Cyclotomic& x, long long k);
Cyclotomic cyclo_conj(const Cyclotomic& x);
// x * conj(x)
Cyclotomic abs_squared(const Cyclotomic& x);

// Engaged iff x is a rational number (only the constant coordinate nonzero).
std::optional<Rational> as_rational(const Cyclotomic& x);

enum class Ordering { Less, Equal, Greater };

inline constexpr long long default_precision_cap = 1 << 14;

// Exact comparison of two real cyclotomic values.  Throws InputError when the
// difference is not real, LimitError when interval evaluation still straddles
// zero at precision_cap bits.
Ordering compare_real(const Cyclotomic& x, const Cyclotomic& y,
                      long long precision_cap = default_precision_cap);

// Decimal rendering for reports, significant_digits significant digits.
// Real values render as one number, others as re + im*i.
std::string cyclo_decimal(const Cyclotomic& x, int significant_digits = 15);

// Degree over Q of the subfield generated by the given values inside
// Q(zeta_E), E = lcm of e and the value orders, via the Galois stabilizer.
long long field_degree_of_sums(long long e, const std::vector<Cyclotomic>& values);

}  // namespace occ
