#ifndef BINOM_INTS_HPP
#define BINOM_INTS_HPP

#include <cstdint>
#include <gmpxx.h>

namespace binom {

// Arbitrary-precision coefficient substrate. GMP already maintains the
// canonical forms we need: mpz is sign+magnitude with no leading zero limbs,
// mpq is kept reduced with positive denominator.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ExactInt lcm(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ExactInt pow_ui(const ExactInt& a, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// Inverse of a mod m; returns false if not invertible.
inline bool invert_mod(ExactInt& out, const ExactInt& a, const ExactInt& m) {
    return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline long gcd_l(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long lcm_l(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_l(a, b) * b;
}

// Euler totient for machine-sized n.
inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline bool is_prime_l(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

} // namespace binom

#endif
