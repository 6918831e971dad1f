#include "binom/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace binom {

Config& global_config() {
    static Config cfg;
    return cfg;
}

namespace {

using zp64::Ctx;
using zp64::Fp;

// ---- arithmetic mod an arbitrary mpz modulus (Hensel lifting) ----

PolyZ zm_norm(const PolyZ& f, const ExactInt& m) {
    std::vector<ExactInt> c(f.coeffs());
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    return PolyZ(std::move(c));
}

PolyZ zm_mul(const PolyZ& a, const PolyZ& b, const ExactInt& m) {
    return zm_norm(a * b, m);
}

// divisor g monic
void zm_divrem(const PolyZ& f, const PolyZ& g, const ExactInt& m, PolyZ& q, PolyZ& r) {
    std::vector<ExactInt> rc(f.coeffs());
    int dg = g.degree();
    std::vector<ExactInt> qc(rc.size() > (size_t)dg ? rc.size() - dg : 1, 0);
    while ((int)rc.size() - 1 >= dg && !rc.empty()) {
        ExactInt c = rc.back() % m;
        if (c < 0) c += m;
        size_t shift = rc.size() - 1 - dg;
        qc[shift] = c;
        for (int i = 0; i <= dg; ++i) {
            rc[i + shift] -= c * g.coeff(i);
        }
        while (!rc.empty()) {
            ExactInt& top = rc.back();
            top %= m;
            if (top < 0) top += m;
            if (top != 0) break;
            rc.pop_back();
        }
    }
    for (auto& x : rc) {
        x %= m;
        if (x < 0) x += m;
    }
    q = zm_norm(PolyZ(std::move(qc)), m);
    r = PolyZ(std::move(rc));
}

ExactInt sym_mod(const ExactInt& a, const ExactInt& m) {
    ExactInt r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

PolyZ zm_sym(const PolyZ& f, const ExactInt& m) {
    std::vector<ExactInt> c(f.coeffs());
    for (auto& x : c) x = sym_mod(x, m);
    return PolyZ(std::move(c));
}

// ---- mod-p factoring ----

// exponent given as mpz (for p^d - 1 style exponents)
Fp powmod_big(const Ctx& F, Fp a, const ExactInt& e, const Fp& m) {
    Fp r = {1 % F.p};
    a = zp64::rem(F, a, m);
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        r = zp64::mulmod(F, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = zp64::mulmod(F, r, a, m);
    }
    return r;
}

// f = g(t^p) over F_p implies f = (contract f)^p by Frobenius
Fp pth_root(const Ctx& F, const Fp& f) {
    Fp r((f.size() + F.p - 1) / F.p);
    for (size_t i = 0; i * F.p < f.size(); ++i) r[i] = f[i * F.p];
    zp64::trim(r);
    return r;
}

void squarefree_mod_p(const Ctx& F, Fp f, int outer_mult,
                      std::vector<std::pair<Fp, int>>& out) {
    if (zp64::degree(f) < 1) return;
    Fp d = zp64::deriv(F, f);
    if (zp64::is_zero(d)) {
        squarefree_mod_p(F, pth_root(F, f), outer_mult * (int)F.p, out);
        return;
    }
    Fp c = zp64::gcd(F, f, d);
    Fp w;
    {
        Fp q, r;
        zp64::divrem(F, f, c, q, r);
        w = std::move(q);
    }
    int i = 1;
    while (zp64::degree(w) > 0) {
        Fp y = zp64::gcd(F, w, c);
        Fp fac, r;
        zp64::divrem(F, w, y, fac, r);
        if (zp64::degree(fac) > 0) out.emplace_back(fac, i * outer_mult);
        w = std::move(y);
        Fp c2, r2;
        zp64::divrem(F, c, w, c2, r2);
        c = std::move(c2);
        ++i;
    }
    if (zp64::degree(c) > 0)
        squarefree_mod_p(F, pth_root(F, c), outer_mult * (int)F.p, out);
}

void equal_degree_split(const Ctx& F, const Fp& g, int d, std::mt19937_64& rng,
                        std::vector<Fp>& out) {
    if (zp64::degree(g) == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        Fp u = zp64::random_poly(F, zp64::degree(g) - 1, rng);
        if (zp64::degree(u) < 1) continue;
        Fp w;
        if (F.p == 2) {
            // trace map sum u^(2^i), i < d
            Fp acc = u, pw = u;
            for (int i = 1; i < d; ++i) {
                pw = zp64::mulmod(F, pw, pw, g);
                acc = zp64::add(F, acc, pw);
            }
            w = acc;
        } else {
            ExactInt e = pow_ui(ExactInt((unsigned long)F.p), d) - 1;
            e /= 2;
            w = powmod_big(F, u, e, g);
            w = zp64::sub(F, w, Fp{1});
        }
        Fp s = zp64::gcd(F, w, g);
        int ds = zp64::degree(s);
        if (ds > 0 && ds < zp64::degree(g)) {
            Fp q, r;
            zp64::divrem(F, g, s, q, r);
            equal_degree_split(F, s, d, rng, out);
            equal_degree_split(F, q, d, rng, out);
            return;
        }
    }
}

// complete factorization of a monic squarefree polynomial mod p
std::vector<Fp> factor_squarefree_mod_p(const Ctx& F, Fp f, std::mt19937_64& rng) {
    std::vector<Fp> out;
    Fp h = {0, 1}; // t
    Fp t_poly = {0, 1};
    int d = 0;
    while (zp64::degree(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod_big(F, h, ExactInt((unsigned long)F.p), f);
        Fp g = zp64::gcd(F, zp64::sub(F, h, t_poly), f);
        if (zp64::degree(g) > 0) {
            equal_degree_split(F, g, d, rng, out);
            Fp q, r;
            zp64::divrem(F, f, g, q, r);
            f = std::move(q);
            h = zp64::rem(F, h, f);
        }
    }
    if (zp64::degree(f) > 0) out.push_back(f);
    return out;
}

} // namespace

std::vector<std::pair<PolyZ, int>> factor_mod_p(const PolyZ& f, long p, std::uint64_t seed) {
    if (!is_prime_l(p)) throw std::domain_error("factor_mod_p: p is not prime");
    if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    if (f.lc() % ExactInt(p) == 0)
        throw std::domain_error("factor_mod_p: p divides the leading coefficient");
    Ctx F{(std::uint64_t)p};
    Fp fp = zp64::monic(F, to_zp(f, F));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<PolyZ, int>> out;
    std::vector<std::pair<Fp, int>> sqf;
    squarefree_mod_p(F, fp, 1, sqf);
    for (auto& [part, mult] : sqf) {
        auto irr = factor_squarefree_mod_p(F, zp64::monic(F, part), rng);
        for (auto& g : irr) out.emplace_back(from_zp(g), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return a.second < b.second;
    });
    return out;
}

// ---- Hensel lifting ----

namespace {

PolyZ prod_mod(const std::vector<PolyZ>& v, size_t lo, size_t hi, const ExactInt& m) {
    PolyZ r = PolyZ::constant(ExactInt(1));
    for (size_t i = lo; i < hi; ++i) r = zm_mul(r, v[i], m);
    return r;
}

// lift F = G*H mod p to mod P (F, G, H monic; G, H coprime mod p)
void lift_pair(const PolyZ& F_target, PolyZ& G, PolyZ& H, long p, const ExactInt& P) {
    Ctx Fp_ctx{(std::uint64_t)p};
    Fp gp = to_zp(G, Fp_ctx), hp = to_zp(H, Fp_ctx);
    Fp gg, sp, tp;
    zp64::xgcd(Fp_ctx, gp, hp, gg, sp, tp);
    if (zp64::degree(gg) != 0)
        throw std::domain_error("hensel_lift: factors are not coprime mod p");
    PolyZ S = from_zp(sp), T = from_zp(tp);
    ExactInt m(p);
    while (m < P) {
        ExactInt m2 = m * m;
        if (m2 > P) m2 = P;
        PolyZ e = zm_norm(F_target - G * H, m2);
        PolyZ q, r;
        zm_divrem(zm_mul(S, e, m2), H, m2, q, r);
        PolyZ G2 = zm_norm(G + T * e + q * G, m2);
        PolyZ H2 = zm_norm(H + r, m2);
        PolyZ b = zm_norm(S * G2 + T * H2 - PolyZ::constant(ExactInt(1)), m2);
        PolyZ c, d;
        zm_divrem(zm_mul(S, b, m2), H2, m2, c, d);
        S = zm_norm(S - d, m2);
        T = zm_norm(T - T * b - c * G2, m2);
        G = std::move(G2);
        H = std::move(H2);
        m = m2;
    }
}

void lift_tree(const PolyZ& F_target, const std::vector<PolyZ>& leaves, size_t lo, size_t hi,
               long p, const ExactInt& P, std::vector<PolyZ>& out) {
    if (hi - lo == 1) {
        out.push_back(zm_norm(F_target, P));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ExactInt pz(p);
    PolyZ G = prod_mod(leaves, lo, mid, pz);
    PolyZ H = prod_mod(leaves, mid, hi, pz);
    lift_pair(F_target, G, H, p, P);
    lift_tree(G, leaves, lo, mid, p, P, out);
    lift_tree(H, leaves, mid, hi, p, P, out);
}

} // namespace

std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyZ>& factors_mod_p,
                               long p, long k) {
    if (!is_prime_l(p)) throw std::domain_error("hensel_lift: p is not prime");
    if (k < 1) throw std::domain_error("hensel_lift: k must be >= 1");
    Ctx F{(std::uint64_t)p};
    Fp fp = zp64::monic(F, to_zp(f, F));
    // precondition: product of the (monic) inputs is f/lc mod p
    Fp prod = {1 % F.p};
    for (const auto& g : factors_mod_p) prod = zp64::mul(F, prod, zp64::monic(F, to_zp(g, F)));
    if (prod != fp)
        throw std::domain_error("hensel_lift: factors do not multiply to f mod p");
    if (zp64::degree(zp64::gcd(F, fp, zp64::deriv(F, fp))) != 0)
        throw std::domain_error("hensel_lift: f is not squarefree mod p");

    ExactInt P = pow_ui(ExactInt(p), (unsigned long)k);
    ExactInt lcinv;
    if (!invert_mod(lcinv, f.lc() % P, P))
        throw std::domain_error("hensel_lift: leading coefficient not invertible");
    PolyZ F_target = zm_norm(f * PolyZ::constant(lcinv), P);

    std::vector<PolyZ> leaves;
    for (const auto& g : factors_mod_p) leaves.push_back(from_zp(zp64::monic(F, to_zp(g, F))));
    std::vector<PolyZ> out;
    lift_tree(F_target, leaves, 0, leaves.size(), p, P, out);
    return out;
}

// ---- factorization over Q (Zassenhaus) ----

namespace {

bool divides_z(const PolyZ& d, const PolyZ& f) {
    auto [q, r] = poly_divrem(to_rational(f), to_rational(d));
    (void)q;
    return r.is_zero();
}

// Mignotte-style bound on coefficients of lc(f) * (any monic-normalized
// factor of f): 2^n * |f|_2 * |lc(f)|
ExactInt coeff_bound(const PolyZ& f) {
    ExactInt s = 0;
    for (const auto& c : f.coeffs()) s += c * c;
    ExactInt norm2 = sqrt(s) + 1;
    return (ExactInt(1) << (unsigned long)f.degree()) * norm2 * abs(f.lc());
}

// all irreducible primitive factors of a primitive squarefree integer poly
std::vector<PolyZ> factor_squarefree_z(const PolyZ& f, std::uint64_t seed) {
    if (f.degree() <= 0) return {};
    if (f.degree() == 1) return {z_primitive(f)};

    // smallest odd primes keeping f squarefree; among the first few, prefer
    // the one with the fewest modular factors to tame recombination
    struct Choice {
        long p;
        std::vector<Fp> factors;
    };
    std::vector<Choice> choices;
    for (long p = 3; choices.size() < 3 && p < 10000; p += 2) {
        if (!is_prime_l(p)) continue;
        if (f.lc() % ExactInt(p) == 0) continue;
        Ctx F{(std::uint64_t)p};
        Fp fp = zp64::monic(F, to_zp(f, F));
        if (zp64::degree(fp) != f.degree()) continue;
        if (zp64::degree(zp64::gcd(F, fp, zp64::deriv(F, fp))) != 0) continue;
        std::mt19937_64 rng(seed);
        Choice ch{p, factor_squarefree_mod_p(F, fp, rng)};
        choices.push_back(std::move(ch));
        if (choices.back().factors.size() == 1) break; // irreducible already certain
    }
    if (choices.empty()) throw std::runtime_error("factor_over_q: no usable prime found");
    const Choice* best = &choices[0];
    for (const auto& ch : choices)
        if (ch.factors.size() < best->factors.size()) best = &ch;
    long p = best->p;
    if (best->factors.size() == 1) return {z_primitive(f)};

    ExactInt B = 2 * coeff_bound(f) + 1;
    long k = 1;
    ExactInt pk(p);
    while (pk < B) {
        pk *= p;
        ++k;
    }
    std::vector<PolyZ> leaves;
    for (const auto& g : best->factors) leaves.push_back(from_zp(g));
    std::vector<PolyZ> lifted = hensel_lift(f, leaves, p, k);
    ExactInt P = pow_ui(ExactInt(p), (unsigned long)k);

    // subset recombination
    std::vector<PolyZ> result;
    std::vector<int> remaining(lifted.size());
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = (int)i;
    PolyZ cur = f;

    auto try_size = [&](size_t s) -> bool {
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            int degsum = 0;
            for (size_t i : idx) degsum += lifted[remaining[i]].degree();
            if (degsum < cur.degree()) {
                PolyZ cand = PolyZ::constant(cur.lc());
                for (size_t i : idx) cand = zm_mul(cand, lifted[remaining[i]], P);
                cand = z_primitive(zm_sym(cand, P));
                if (divides_z(cand, cur)) {
                    result.push_back(cand);
                    cur = to_integer(poly_divrem(to_rational(cur), to_rational(cand)).first);
                    std::vector<int> rest;
                    std::vector<bool> used(remaining.size(), false);
                    for (size_t i : idx) used[i] = true;
                    for (size_t i = 0; i < remaining.size(); ++i)
                        if (!used[i]) rest.push_back(remaining[i]);
                    remaining = std::move(rest);
                    return true;
                }
            }
            // next combination
            size_t i = s;
            while (i-- > 0) {
                if (idx[i] != i + remaining.size() - s) {
                    ++idx[i];
                    for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return false;
            }
            if (s == 0) return false;
        }
    };

    for (size_t s = 1; s <= remaining.size() / 2;) {
        if (!try_size(s)) ++s;
    }
    if (cur.degree() > 0) result.push_back(z_primitive(cur));
    return result;
}

} // namespace

FactorizationQ factor_over_q(const PolyQ& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor_over_q: zero polynomial");
    FactorizationQ out;
    if (f.degree() == 0) {
        out.unit = f.lc();
        return out;
    }
    auto [content, prim] = content_primitive(f);
    (void)content;
    for (const auto& [part, mult] : squarefree_decompose(to_rational(prim))) {
        PolyZ pz = content_primitive(part).second;
        for (const auto& irr : factor_squarefree_z(pz, seed))
            out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return a.second < b.second;
    });
    PolyQ prod = PolyQ::constant(ExactRat(1));
    for (const auto& [g, m] : out.factors) prod *= to_rational(g).pow(m);
    out.unit = f.lc() / prod.lc();
    if (prod * out.unit != f)
        throw std::runtime_error("factor_over_q: product reconstruction failed");
    return out;
}

FactorizationQ factor_over_q(const PolyZ& f, std::uint64_t seed) {
    return factor_over_q(to_rational(f), seed);
}

bool is_irreducible_q(const PolyQ& f) {
    if (f.degree() < 1) throw std::domain_error("is_irreducible_q: constant polynomial");
    FactorizationQ fac = factor_over_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_irreducible_q(const PolyZ& f) {
    return is_irreducible_q(to_rational(f));
}

} // namespace binom
