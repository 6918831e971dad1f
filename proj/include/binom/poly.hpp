#ifndef BINOM_POLY_HPP
#define BINOM_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "binom/ints.hpp"

namespace binom {

// Dense univariate polynomial over an exact coefficient ring R.
// Invariant: the coefficient vector carries no trailing (leading-term) zeros;
// the zero polynomial is the empty vector and reports degree -1.
template <typename R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
    static Poly var() { return Poly(std::vector<R>{R(0), R(1)}); }
    // c * t^e
    static Poly monomial(R c, size_t e) {
        std::vector<R> v(e + 1, R(0));
        v[e] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    R coeff(long i) const {
        if (i < 0 || i >= (long)c_.size()) return R(0);
        return c_[i];
    }
    const std::vector<R>& coeffs() const { return c_; }
    const R& lc() const {
        if (c_.empty()) throw std::domain_error("lc of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator-() const {
        std::vector<R> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), R(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), R(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        std::vector<R> r(c_.size() + o.c_.size() - 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly operator*(const R& s) const {
        std::vector<R> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    R evaluate(const R& x) const {
        R acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R((long)i);
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        Poly r = constant(R(1));
        Poly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    // f(t) -> f(t^n)
    Poly compose_power(unsigned long n) const {
        if (n == 0) throw std::domain_error("compose_power: n must be >= 1");
        if (c_.empty() || n == 1) return *this;
        std::vector<R> r((c_.size() - 1) * n + 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * n] = c_[i];
        return Poly(std::move(r));
    }

    // f(g(t))
    Poly compose(const Poly& g) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    // t^k * f
    Poly shift_up(size_t k) const {
        if (c_.empty()) return Poly();
        std::vector<R> r(c_.size() + k, R(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

private:
    std::vector<R> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using PolyZ = Poly<ExactInt>;
using PolyQ = Poly<ExactRat>;

// ---- field coefficient operations (R must support exact division) ----

template <typename R>
std::pair<Poly<R>, Poly<R>> poly_divrem(const Poly<R>& f, const Poly<R>& g) {
    if (g.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    std::vector<R> r(f.coeffs());
    std::vector<R> q;
    int dg = g.degree();
    if ((int)r.size() >= dg + 1) q.assign(r.size() - dg, R(0));
    while ((int)r.size() - 1 >= dg) {
        R c = r.back() / g.lc();
        size_t shift = r.size() - 1 - dg;
        q[shift] = c;
        for (int i = 0; i <= dg; ++i) r[i + shift] -= c * g.coeff(i);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

template <typename R>
Poly<R> poly_mod(const Poly<R>& f, const Poly<R>& g) {
    return poly_divrem(f, g).second;
}

template <typename R>
Poly<R> make_monic(const Poly<R>& f) {
    if (f.is_zero()) return f;
    R inv = R(1) / f.lc();
    return f * inv;
}

// Plain Euclidean gcd; adequate for number-field coefficients and as a
// fallback. Rational inputs go through poly_gcd below instead.
template <typename R>
Poly<R> poly_gcd_euclid(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        Poly<R> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// g = gcd(a,b) monic with s*a + t*b = g
template <typename R>
void poly_xgcd(Poly<R> a, Poly<R> b, Poly<R>& g, Poly<R>& s, Poly<R>& t) {
    Poly<R> s0 = Poly<R>::constant(R(1)), s1;
    Poly<R> t0, t1 = Poly<R>::constant(R(1));
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<R> s2 = s0 - q * s1;
        Poly<R> t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.is_zero() && !(a.lc() == R(1))) {
        R inv = R(1) / a.lc();
        a = a * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

// ---- integer / rational specifics (poly.cpp) ----

PolyQ to_rational(const PolyZ& f);
// requires all coefficients integral
PolyZ to_integer(const PolyQ& f);
bool is_integral(const PolyQ& f);

// gcd of coefficients, nonnegative; content(0) = 0
ExactInt z_content(const PolyZ& f);
// f / content with positive leading coefficient
PolyZ z_primitive(const PolyZ& f);

// f = content * primitive, primitive integral with gcd 1 and positive lc
std::pair<ExactRat, PolyZ> content_primitive(const PolyQ& f);

// Monic gcd over Q, computed by a small-prime modular algorithm on the
// primitive integer parts with a trial-division certificate.
PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);
PolyZ poly_gcd_z(const PolyZ& f, const PolyZ& g); // primitive, positive lc

// Resultant via the Euclidean remainder recursion over Q.
ExactRat resultant(const PolyQ& f, const PolyQ& g);
ExactInt resultant_z(const PolyZ& f, const PolyZ& g);

// Yun squarefree decomposition (characteristic 0): f = lc * prod fi^i
std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f);

// n-th cyclotomic polynomial, memoized
PolyZ cyclotomic(long n);

} // namespace binom

#include "binom/zp64.hpp"

namespace binom {

// f mod p with coefficients in [0, p)
zp64::Fp to_zp(const PolyZ& f, const zp64::Ctx& F);
PolyZ from_zp(const zp64::Fp& f);

} // namespace binom

#endif
