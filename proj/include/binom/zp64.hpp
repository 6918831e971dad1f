#ifndef BINOM_ZP64_HPP
#define BINOM_ZP64_HPP

// Dense polynomial arithmetic over Z/p for a word-sized prime p. This is the
// inner loop of modular gcd and mod-p factoring; everything is plain uint64
// with 128-bit products so no GMP traffic happens per coefficient.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace binom::zp64 {

using Fp = std::vector<std::uint64_t>; // coeff of t^i at index i, no leading zeros

struct Ctx {
    std::uint64_t p; // prime, p < 2^62

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return (std::uint64_t)((unsigned __int128)a * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a % p, p - 2); }
};

inline void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Fp& f) { return (int)f.size() - 1; }
inline bool is_zero(const Fp& f) { return f.empty(); }

inline Fp add(const Ctx& F, const Fp& a, const Fp& b) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

inline Fp sub(const Ctx& F, const Fp& a, const Fp& b) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(r);
    return r;
}

inline Fp mul(const Ctx& F, const Fp& a, const Fp& b) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Fp scal(const Ctx& F, const Fp& a, std::uint64_t c) {
    if (c == 0) return {};
    Fp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

inline Fp monic(const Ctx& F, const Fp& a) {
    if (a.empty() || a.back() == 1) return a;
    return scal(F, a, F.inv(a.back()));
}

inline void divrem(const Ctx& F, const Fp& a, const Fp& b, Fp& q, Fp& r) {
    if (b.empty()) throw std::domain_error("zp64: division by zero polynomial");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    std::uint64_t binv = F.inv(b.back());
    while (r.size() >= b.size() && !r.empty()) {
        std::uint64_t c = F.mul(r.back(), binv);
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + shift] = F.sub(r[i + shift], F.mul(c, b[i]));
        trim(r);
    }
    trim(q);
}

inline Fp rem(const Ctx& F, const Fp& a, const Fp& b) {
    Fp q, r;
    divrem(F, a, b, q, r);
    return r;
}

inline Fp gcd(const Ctx& F, Fp a, Fp b) {
    while (!b.empty()) {
        Fp r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

// g = gcd(a,b) monic, with s*a + t*b = g
inline void xgcd(const Ctx& F, Fp a, Fp b, Fp& g, Fp& s, Fp& t) {
    Fp s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!b.empty()) {
        Fp q, r;
        divrem(F, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        Fp s2 = sub(F, s0, mul(F, q, s1));
        Fp t2 = sub(F, t0, mul(F, q, t1));
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = F.inv(a.back());
        a = scal(F, a, inv);
        s0 = scal(F, s0, inv);
        t0 = scal(F, t0, inv);
    }
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

inline Fp deriv(const Ctx& F, const Fp& a) {
    if (a.size() <= 1) return {};
    Fp r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], i % F.p);
    trim(r);
    return r;
}

inline Fp mulmod(const Ctx& F, const Fp& a, const Fp& b, const Fp& m) {
    return rem(F, mul(F, a, b), m);
}

// a^e mod m, with a multiprecision-free exponent
inline Fp powmod(const Ctx& F, Fp a, std::uint64_t e, const Fp& m) {
    Fp r = {1 % F.p};
    a = rem(F, a, m);
    while (e) {
        if (e & 1) r = mulmod(F, r, a, m);
        a = mulmod(F, a, a, m);
        e >>= 1;
    }
    return r;
}

inline Fp random_poly(const Ctx& F, int deg, std::mt19937_64& rng) {
    Fp r(deg + 1);
    std::uniform_int_distribution<std::uint64_t> d(0, F.p - 1);
    for (auto& c : r) c = d(rng);
    trim(r);
    return r;
}

} // namespace binom::zp64

#endif
