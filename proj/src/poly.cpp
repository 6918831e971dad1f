#include "binom/poly.hpp"

#include <map>
#include <mutex>

namespace binom {

PolyQ to_rational(const PolyZ& f) {
    std::vector<ExactRat> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = ExactRat(f.coeffs()[i]);
    return PolyQ(std::move(c));
}

bool is_integral(const PolyQ& f) {
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

PolyZ to_integer(const PolyQ& f) {
    std::vector<ExactInt> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (f.coeffs()[i].get_den() != 1)
            throw std::domain_error("to_integer: non-integral coefficient");
        c[i] = f.coeffs()[i].get_num();
    }
    return PolyZ(std::move(c));
}

ExactInt z_content(const PolyZ& f) {
    ExactInt g = 0;
    for (const auto& c : f.coeffs()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

PolyZ z_primitive(const PolyZ& f) {
    if (f.is_zero()) return f;
    ExactInt g = z_content(f);
    if (f.lc() < 0) g = -g;
    std::vector<ExactInt> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i] / g;
    return PolyZ(std::move(c));
}

std::pair<ExactRat, PolyZ> content_primitive(const PolyQ& f) {
    if (f.is_zero()) throw std::domain_error("content_primitive: zero polynomial");
    ExactInt den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, ExactInt(c.get_den()));
    std::vector<ExactInt> zc(f.coeffs().size());
    for (size_t i = 0; i < zc.size(); ++i) {
        ExactRat scaled = f.coeffs()[i] * ExactRat(den);
        zc[i] = scaled.get_num();
    }
    PolyZ zf(std::move(zc));
    ExactInt cont = z_content(zf);
    if (zf.lc() < 0) cont = -cont;
    PolyZ prim = z_primitive(zf);
    ExactRat content(cont, den);
    content.canonicalize();
    return {content, prim};
}

zp64::Fp to_zp(const PolyZ& f, const zp64::Ctx& F) {
    zp64::Fp r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        ExactInt c = f.coeffs()[i] % ExactInt((unsigned long)F.p);
        if (c < 0) c += (unsigned long)F.p;
        r[i] = c.get_ui();
    }
    zp64::trim(r);
    return r;
}

PolyZ from_zp(const zp64::Fp& f) {
    std::vector<ExactInt> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = ExactInt((unsigned long)f[i]);
    return PolyZ(std::move(c));
}

// ---- modular integer gcd ----

namespace {

const std::vector<std::uint64_t>& gcd_primes() {
    static std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> v;
        mpz_class p = (mpz_class(1) << 61);
        for (int i = 0; i < 32; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            v.push_back(p.get_ui());
        }
        return v;
    }();
    return primes;
}

bool divides_z(const PolyZ& d, const PolyZ& f) {
    auto [q, r] = poly_divrem(to_rational(f), to_rational(d));
    (void)q;
    return r.is_zero();
}

// symmetric representative in (-m/2, m/2]
ExactInt sym_mod(const ExactInt& a, const ExactInt& m) {
    ExactInt r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

} // namespace

PolyZ poly_gcd_z(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("poly_gcd: both inputs zero");
    if (f.is_zero()) return z_primitive(g);
    if (g.is_zero()) return z_primitive(f);
    PolyZ a = z_primitive(f), b = z_primitive(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    ExactInt glc = gcd(a.lc(), b.lc());

    int best_deg = -2;
    ExactInt modulus = 0;
    std::vector<ExactInt> crt; // symmetric coefficients of glc * monic gcd

    for (std::uint64_t p : gcd_primes()) {
        zp64::Ctx F{p};
        if (a.lc() % ExactInt((unsigned long)p) == 0) continue;
        if (b.lc() % ExactInt((unsigned long)p) == 0) continue;
        zp64::Fp gp = zp64::gcd(F, to_zp(a, F), to_zp(b, F));
        int d = zp64::degree(gp);
        if (d == 0) return PolyZ{ExactInt(1)};
        if (best_deg != -2 && d > best_deg) continue; // unlucky prime
        gp = zp64::scal(F, gp, [&] {
            ExactInt r = glc % ExactInt((unsigned long)p);
            if (r < 0) r += (unsigned long)p;
            return r.get_ui();
        }());
        ExactInt mp((unsigned long)p);
        if (best_deg == -2 || d < best_deg) {
            best_deg = d;
            modulus = mp;
            crt.assign(d + 1, 0);
            for (int i = 0; i <= d; ++i)
                crt[i] = sym_mod(ExactInt((unsigned long)(i < (int)gp.size() ? gp[i] : 0)), mp);
        } else {
            // combine with existing residues
            ExactInt m_new = modulus * mp;
            ExactInt minv;
            invert_mod(minv, modulus, mp);
            for (int i = 0; i <= d; ++i) {
                ExactInt rp((unsigned long)(i < (int)gp.size() ? gp[i] : 0));
                ExactInt diff = (rp - crt[i]) % mp;
                if (diff < 0) diff += mp;
                ExactInt k = (diff * minv) % mp;
                crt[i] = sym_mod(crt[i] + k * modulus, m_new);
            }
            modulus = m_new;
        }
        PolyZ cand = z_primitive(PolyZ(std::vector<ExactInt>(crt)));
        if (divides_z(cand, a) && divides_z(cand, b)) return cand;
    }
    throw std::runtime_error("poly_gcd_z: prime supply exhausted");
}

PolyQ poly_gcd(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("poly_gcd: both inputs zero");
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    auto [cf, pf] = content_primitive(f);
    auto [cg, pg] = content_primitive(g);
    (void)cf;
    (void)cg;
    return make_monic(to_rational(poly_gcd_z(pf, pg)));
}

// ---- resultant ----

namespace {
ExactRat rat_pow(const ExactRat& a, long e) {
    ExactRat r = 1;
    for (long i = 0; i < e; ++i) r *= a;
    return r;
}
} // namespace

ExactRat resultant(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("resultant: zero input polynomial");
    if (f.degree() == 0) return rat_pow(f.lc(), g.degree());
    if (g.degree() == 0) return rat_pow(g.lc(), f.degree());
    PolyQ r = poly_mod(f, g);
    int sign = (f.degree() % 2 && g.degree() % 2) ? -1 : 1;
    if (r.is_zero()) return ExactRat(0);
    ExactRat res = rat_pow(g.lc(), f.degree() - r.degree()) * resultant(g, r);
    return sign < 0 ? ExactRat(-res) : res;
}

ExactInt resultant_z(const PolyZ& f, const PolyZ& g) {
    ExactRat r = resultant(to_rational(f), to_rational(g));
    if (r.get_den() != 1)
        throw std::runtime_error("resultant_z: non-integer result");
    return r.get_num();
}

// ---- squarefree decomposition (Yun) ----

std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (f.degree() == 0) return out;
    PolyQ fm = make_monic(f);
    PolyQ d = fm.derivative();
    PolyQ g = poly_gcd(fm, d);
    PolyQ w = poly_divrem(fm, g).first;
    PolyQ s = poly_divrem(d, g).first;
    int i = 1;
    while (w.degree() >= 1) {
        PolyQ y = s - w.derivative();
        PolyQ h = poly_gcd(w, y); // y == 0 yields monic(w)
        if (h.degree() >= 1) out.emplace_back(make_monic(h), i);
        w = poly_divrem(w, h).first;
        s = y.is_zero() ? PolyQ() : poly_divrem(y, h).first;
        ++i;
    }
    return out;
}

// ---- cyclotomic polynomials ----

namespace {

// exact division by a monic integer polynomial
PolyZ z_div_monic(const PolyZ& f, const PolyZ& g) {
    std::vector<ExactInt> r(f.coeffs());
    int dg = g.degree();
    std::vector<ExactInt> q(r.size() > (size_t)dg ? r.size() - dg : 1, 0);
    while ((int)r.size() - 1 >= dg && !r.empty()) {
        ExactInt c = r.back();
        size_t shift = r.size() - 1 - dg;
        q[shift] = c;
        for (int i = 0; i <= dg; ++i) r[i + shift] -= c * g.coeff(i);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) throw std::runtime_error("z_div_monic: division not exact");
    return PolyZ(std::move(q));
}

std::map<long, PolyZ> g_cyclo_cache;
std::mutex g_cyclo_mutex;

} // namespace

PolyZ cyclotomic(long n) {
    if (n < 1) throw std::domain_error("cyclotomic: n must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(n);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    // t^n - 1 divided by Phi_d for every proper divisor d
    std::vector<ExactInt> tn(n + 1, 0);
    tn[0] = -1;
    tn[n] = 1;
    PolyZ r((std::vector<ExactInt>(tn)));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) r = z_div_monic(r, cyclotomic(d));
    std::lock_guard<std::mutex> lk(g_cyclo_mutex);
    g_cyclo_cache.emplace(n, r);
    return r;
}

} // namespace binom
