#include "binom/hartley.hpp"

#include <stdexcept>

namespace binom {

HartleyReport is_n_hartley(const PolyZ& delta, long n) {
    if (delta.is_zero()) throw std::domain_error("is_n_hartley: zero polynomial");
    if (n < 1) throw std::domain_error("is_n_hartley: n must be >= 1");
    FactorizationQ fq = factor_over_q(delta);
    HartleyReport rep{delta, n, {}, true, fq.unit};
    for (const auto& [h, s] : fq.factors) {
        auto K = NumberField::create_unchecked(h);
        long lambda = lambda_value(NfElem::generator(K), n);
        bool divides = s % lambda == 0;
        rep.per_factor.push_back(HartleyFactor{h, s, lambda, divides});
        if (!divides) rep.verdict = false;
    }
    return rep;
}

NfPoly twist_product(const PolyZ& g, long n) {
    if (n < 1) throw std::domain_error("twist_product: n must be >= 1");
    auto K = NumberField::cyclotomic_field(n);
    NfElem zeta = n <= 2 ? NfElem::from_rational(K, n == 2 ? -1 : 1) : NfElem::generator(K);
    NfPoly prod = NfPoly::from_rational(K, PolyQ::constant(ExactRat(1)));
    NfElem zj = NfElem::from_rational(K, 1);
    for (long j = 0; j < n; ++j) {
        // g(zeta^j t): coefficient k picks up zeta^{jk}
        std::vector<PolyQ> c(g.coeffs().size());
        NfElem zjk = NfElem::from_rational(K, 1);
        for (size_t k = 0; k < c.size(); ++k) {
            c[k] = zjk.repr() * ExactRat(g.coeff((long)k));
            zjk = zjk * zj;
        }
        prod = prod * NfPoly(K, std::move(c));
        zj = zj * zeta;
    }
    return prod;
}

std::optional<int> verify_witness(const PolyZ& delta, long n, const PolyZ& g) {
    NfPoly prod = twist_product(g, n);
    PolyZ target = delta.compose_power((unsigned long)n);
    if (prod.degree() != target.degree()) return std::nullopt;
    std::vector<ExactInt> flat(prod.coeffs_raw().size());
    for (size_t k = 0; k < flat.size(); ++k) {
        const PolyQ& c = prod.coeffs_raw()[k];
        if (c.degree() > 0) return std::nullopt; // not rational
        ExactRat v = c.coeff(0);
        if (v.get_den() != 1) return std::nullopt;
        flat[k] = v.get_num();
    }
    PolyZ p(std::move(flat));
    if (p == target) return 1;
    if (p == -target) return -1;
    return std::nullopt;
}

bool hartley_multiplicativity(const PolyZ& delta, long m, long n) {
    if (gcd_l(m, n) != 1)
        throw std::domain_error("hartley_multiplicativity: m and n must be coprime");
    bool hm = is_n_hartley(delta, m).verdict;
    bool hn = is_n_hartley(delta, n).verdict;
    bool hmn = is_n_hartley(delta, m * n).verdict;
    return hmn == (hm && hn);
}

PolyZ torus_knot_delta(long p, long q) {
    if (p < 1 || q < 1) throw std::domain_error("torus_knot_delta: p, q must be >= 1");
    if (gcd_l(p, q) != 1) throw std::domain_error("torus_knot_delta: p, q must be coprime");
    auto power_minus_one = [](long k) {
        std::vector<ExactRat> c(k + 1);
        c[0] = -1;
        c[k] = 1;
        return PolyQ(std::move(c));
    };
    PolyQ num = power_minus_one(p * q) * power_minus_one(1);
    PolyQ den = power_minus_one(p) * power_minus_one(q);
    auto [quot, rem] = poly_divrem(num, den);
    if (!rem.is_zero()) throw std::logic_error("torus_knot_delta: non-exact division");
    if (quot.degree() != (p - 1) * (q - 1))
        throw std::logic_error("torus_knot_delta: unexpected degree");
    return to_integer(quot);
}

PolyZ sakuma_delta() {
    // cable formula: companion Alexander polynomial evaluated at t^5, to the
    // fourth power for the four connect summands; the (5,1) pattern is trivial
    return torus_knot_delta(13, 5).compose_power(5).pow(4);
}

} // namespace binom
