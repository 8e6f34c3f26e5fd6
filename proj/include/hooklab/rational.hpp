#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hooklab {

// Exact arithmetic everywhere: arbitrary-precision integers and reduced
// rationals with positive denominator (gmp keeps mpq_class canonical).
using BigInt = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long overloads; funnel through long (64-bit here)
inline BigInt bigint(long long v) { return BigInt(static_cast<long>(v)); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt int_pow(long long base, unsigned long exp) {
    return int_pow(BigInt(static_cast<long>(base)), exp);
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    return make_rational(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// binomial(n, k) for any integer n (gmp extends to negative n the usual way)
inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline BigInt binomial(long long n, unsigned long k) {
    return binomial(BigInt(static_cast<long>(n)), k);
}

// C(x, 2) = x(x-1)/2, valid for negative x
inline long long choose2(long long x) { return x * (x - 1) / 2; }

// Nonnegative residue, also for negative a.
inline long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Floor division for negative numerators.
inline long long div_floor(long long a, long long m) {
    long long q = a / m, r = a % m;
    return r < 0 ? q - 1 : q;
}

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hooklab
