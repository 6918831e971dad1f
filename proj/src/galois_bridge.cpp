#include "binom/galois_bridge.hpp"

#include <algorithm>
#include <stdexcept>

#include "binom/factor.hpp"

namespace binom {

namespace {

// coordinates of an element of F = K[y]/g in the Q-basis x^i y^j
std::vector<ExactRat> rel_coords(const NfPoly& a, int d, int e) {
    std::vector<ExactRat> out((size_t)d * e);
    for (int j = 0; j < e && j < (int)a.coeffs_raw().size(); ++j)
        for (int i = 0; i < d; ++i) out[(size_t)j * d + i] = a.coeffs_raw()[j].coeff(i);
    return out;
}

// solve M * u = rhs for each right-hand side; M is square and invertible
// (columns are powers of a primitive element)
std::vector<std::vector<ExactRat>> solve_linear(std::vector<std::vector<ExactRat>> M,
                                                std::vector<std::vector<ExactRat>> rhs) {
    size_t D = M.size(), R = rhs.size();
    for (size_t c = 0; c < D; ++c) {
        size_t pivot = c;
        while (pivot < D && M[pivot][c] == 0) ++pivot;
        if (pivot == D) throw std::runtime_error("splitting_field: singular power basis");
        if (pivot != c) {
            std::swap(M[pivot], M[c]);
            for (auto& r : rhs) std::swap(r[pivot], r[c]);
        }
        ExactRat inv = ExactRat(1) / M[c][c];
        for (size_t k = c; k < D; ++k) M[c][k] *= inv;
        for (auto& r : rhs) r[c] *= inv;
        for (size_t i = 0; i < D; ++i) {
            if (i == c || M[i][c] == 0) continue;
            ExactRat f = M[i][c];
            for (size_t k = c; k < D; ++k) M[i][k] -= f * M[c][k];
            for (auto& r : rhs) r[i] -= f * r[c];
        }
    }
    return rhs;
}

PolyQ compose_mod(const PolyQ& f, const PolyQ& g, const PolyQ& m) {
    PolyQ acc;
    for (size_t i = f.coeffs().size(); i-- > 0;)
        acc = poly_mod(acc * g + PolyQ::constant(f.coeffs()[i]), m);
    return acc;
}

// sigma_a on the base field: x -> x^a
PolyQ apply_unit(const PolyQ& r, long a, const PolyQ& h) {
    return poly_mod(r.compose(PolyQ::monomial(ExactRat(1), (size_t)a)), h);
}

} // namespace

SplittingField splitting_field(const ExactRat& alpha, long n) {
    if (n < 1) throw std::domain_error("splitting_field: n must be >= 1");
    if (alpha == 0) throw std::domain_error("splitting_field: alpha must be nonzero");
    if (n * euler_phi(n) > global_config().degree_bound)
        throw std::domain_error("splitting_field: n * phi(n) exceeds the degree bound");

    auto K = NumberField::cyclotomic_field(n);
    NfElem zeta = n <= 2 ? NfElem::from_rational(K, n == 2 ? -1 : 1) : NfElem::generator(K);
    auto facs = trager_factor(NfPoly::binomial(NfElem::from_rational(K, alpha), n));
    // with zeta_n in the base field every irreducible factor has the same
    // degree and any single root generates the full splitting field
    NfPoly g = facs[0].first;
    int e = g.degree(), d = K->degree();
    int D = d * e;

    if (e == 1) {
        NfElem beta = -g.coeff(0);
        return SplittingField{K->minpoly_primitive(), zeta.repr(), beta.repr(),
                              n,                      alpha,       K,
                              zeta,                   g,           0};
    }

    for (long c = 1; c <= 20; ++c) {
        // G(t) = c^e g((t - zeta)/c), monic with root theta = zeta + c*beta
        std::vector<PolyQ> sc(e + 1);
        ExactRat pw = 1;
        for (int i = e; i >= 0; --i) {
            sc[i] = g.coeffs_raw()[i] * pw;
            pw *= c;
        }
        NfPoly G = NfPoly(K, std::move(sc)).shift_arg(-zeta);
        PolyQ N = nf_norm_poly(G);
        if (poly_gcd(N, N.derivative()).degree() != 0) continue;
        // squarefree norm: the D candidate conjugates are distinct, so theta
        // is primitive and N is its monic minimal polynomial

        NfPoly theta(K, {zeta.repr(), PolyQ::constant(ExactRat(c))});
        std::vector<std::vector<ExactRat>> cols(D);
        NfPoly p = NfPoly::from_rational(K, PolyQ::constant(ExactRat(1)));
        for (int k = 0; k < D; ++k) {
            cols[k] = rel_coords(p, d, e);
            p = nf_divrem(p * theta, g).second;
        }
        // row-major matrix with columns = theta powers
        std::vector<std::vector<ExactRat>> M(D, std::vector<ExactRat>(D));
        for (int i = 0; i < D; ++i)
            for (int k = 0; k < D; ++k) M[i][k] = cols[k][i];
        NfPoly ypoly(K, {PolyQ(), PolyQ::constant(ExactRat(1))});
        auto sols = solve_linear(M, {rel_coords(NfPoly(K, {zeta.repr()}), d, e),
                                     rel_coords(ypoly, d, e)});
        PolyQ zexpr(std::move(sols[0]));
        PolyQ bexpr(std::move(sols[1]));

        // consistency: the claimed expressions satisfy the defining relations
        if (!compose_mod(to_rational(cyclotomic(n)), zexpr, N).is_zero())
            throw std::runtime_error("splitting_field: zeta expression fails Phi_n");
        PolyQ bp = PolyQ::constant(ExactRat(1));
        for (long i = 0; i < n; ++i) bp = poly_mod(bp * bexpr, N);
        if (bp != PolyQ::constant(alpha))
            throw std::runtime_error("splitting_field: beta expression fails t^n = alpha");
        if (poly_mod(zexpr + bexpr * ExactRat(c), N) != poly_mod(PolyQ::var(), N))
            throw std::runtime_error("splitting_field: theta decomposition mismatch");
        return SplittingField{content_primitive(N).second, zexpr, bexpr, n, alpha,
                              K,                           zeta,  g,     c};
    }
    throw std::runtime_error("splitting_field: no primitive element found with c <= 20");
}

GaloisGroup automorphism_group(const SplittingField& sf, long n) {
    if (n != sf.n) throw std::domain_error("automorphism_group: n mismatch");
    const NumberFieldPtr& K = sf.base;
    const PolyQ& h = K->minpoly_monic();
    const NfPoly& g = sf.beta_minpoly;
    int e = g.degree(), d = K->degree();
    int D = sf.field_degree();

    GaloisGroup gg{sf, AffineSubgroup{n, {}}, {}};
    std::vector<AffineElem> elems;

    if (sf.shift_c == 0) {
        // F = base field; theta is the base generator
        NfElem beta = -g.coeff(0);
        for (const auto& cand : full_group(n).elements) {
            NfElem sig_beta(K, apply_unit(beta.repr(), cand.a, h));
            if (!(sig_beta == sf.zeta.pow(cand.b) * beta)) continue;
            PolyQ root = d == 1 ? PolyQ() : apply_unit(PolyQ::var(), cand.a, h);
            elems.push_back(cand);
            gg.automorphisms.emplace_back(cand, root);
        }
    } else {
        NfPoly theta(K, {sf.zeta.repr(), PolyQ::constant(ExactRat(sf.shift_c))});
        std::vector<std::vector<ExactRat>> cols(D);
        NfPoly p = NfPoly::from_rational(K, PolyQ::constant(ExactRat(1)));
        for (int k = 0; k < D; ++k) {
            cols[k] = rel_coords(p, d, e);
            p = nf_divrem(p * theta, g).second;
        }
        std::vector<std::vector<ExactRat>> M(D, std::vector<ExactRat>(D));
        for (int i = 0; i < D; ++i)
            for (int k = 0; k < D; ++k) M[i][k] = cols[k][i];

        std::vector<AffineElem> valid;
        std::vector<std::vector<ExactRat>> images;
        for (const auto& cand : full_group(n).elements) {
            // sigma|K : x -> x^a extends with beta -> zeta^b beta iff that
            // value is a root of the coefficientwise image of g
            std::vector<PolyQ> gs(g.coeffs_raw().size());
            for (size_t i = 0; i < gs.size(); ++i)
                gs[i] = apply_unit(g.coeffs_raw()[i], cand.a, h);
            NfPoly zb_y(K, {PolyQ(), sf.zeta.pow(cand.b).repr()});
            NfPoly acc(K);
            for (size_t i = gs.size(); i-- > 0;)
                acc = nf_divrem(acc * zb_y + NfPoly(K, {gs[i]}), g).second;
            if (!acc.is_zero()) continue;
            NfPoly theta_img = zb_y * NfElem::from_rational(K, ExactRat(sf.shift_c)) +
                               NfPoly(K, {sf.zeta.pow(cand.a).repr()});
            valid.push_back(cand);
            images.push_back(rel_coords(theta_img, d, e));
        }
        auto roots = solve_linear(M, images);
        for (size_t i = 0; i < valid.size(); ++i) {
            elems.push_back(valid[i]);
            gg.automorphisms.emplace_back(valid[i], PolyQ(std::move(roots[i])));
        }
    }

    std::sort(elems.begin(), elems.end());
    if ((int)elems.size() != D)
        throw std::runtime_error("automorphism_group: automorphism count != field degree");
    if (subgroup_closure(n, elems).elements != elems)
        throw std::runtime_error("automorphism_group: images do not form a subgroup");
    gg.group = AffineSubgroup{n, elems};
    std::sort(gg.automorphisms.begin(), gg.automorphisms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return gg;
}

bool cross_check_lambda(const ExactRat& alpha, long n) {
    GaloisGroup gg = automorphism_group(splitting_field(alpha, n), n);
    OrbitReport rep = orbit_report(gg.group);
    auto bf = factor_binomial(NfElem::from_rational(NumberField::rationals(), alpha), n);
    std::vector<long> orbit_sizes;
    for (const auto& orb : rep.orbits) orbit_sizes.push_back((long)orb.size());
    std::sort(orbit_sizes.begin(), orbit_sizes.end());
    return rep.lambda == bf.lambda && orbit_sizes == bf.degrees;
}

} // namespace binom
