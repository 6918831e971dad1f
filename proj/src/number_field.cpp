#include "binom/number_field.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace binom {

namespace {

long detect_cyclotomic_index(const PolyZ& hp) {
    int d = hp.degree();
    if (d == 1) return 1; // K = Q; zeta_1 = 1
    if (hp.lc() != 1) return 0;
    if (d % 2 == 1) return 0; // phi(N) is even for N >= 3
    long cap = 2L * d * d + 2;
    for (long N = 3; N <= cap; ++N)
        if (euler_phi(N) == d && cyclotomic(N) == hp) return N;
    return 0;
}

NumberFieldPtr make_field(const PolyZ& minpoly, bool check) {
    if (minpoly.degree() < 1)
        throw std::domain_error("NumberField: minimal polynomial must have degree >= 1");
    PolyZ hp = z_primitive(minpoly);
    if (check && hp.degree() > 1 && !is_irreducible_q(hp))
        throw std::domain_error("NumberField: minimal polynomial is reducible over Q");
    PolyQ h = make_monic(to_rational(hp));
    long cyclo = detect_cyclotomic_index(hp);
    struct Access : NumberField {
        Access(PolyQ a, PolyZ b, long c) : NumberField(std::move(a), std::move(b), c) {}
    };
    return std::make_shared<Access>(std::move(h), std::move(hp), cyclo);
}

void check_same(const NumberFieldPtr& a, const NumberFieldPtr& b) {
    if (a.get() == b.get()) return;
    if (a->minpoly_primitive() == b->minpoly_primitive()) return;
    throw std::domain_error("number field mismatch");
}

} // namespace

NumberFieldPtr NumberField::create(const PolyZ& minpoly) { return make_field(minpoly, true); }
NumberFieldPtr NumberField::create_unchecked(const PolyZ& minpoly) {
    return make_field(minpoly, false);
}

NumberFieldPtr NumberField::rationals() {
    static NumberFieldPtr q = make_field(PolyZ::var(), false);
    return q;
}

NumberFieldPtr NumberField::cyclotomic_field(long N) {
    if (N < 1) throw std::domain_error("cyclotomic_field: N must be >= 1");
    if (N <= 2) return rationals();
    return make_field(cyclotomic(N), false);
}

// ---- NfElem ----

NfElem::NfElem(NumberFieldPtr K, PolyQ repr) : K_(std::move(K)) {
    r_ = K_->degree() == 1 && repr.degree() < 1 ? std::move(repr)
                                                : poly_mod(repr, K_->minpoly_monic());
}

NfElem NfElem::from_rational(NumberFieldPtr K, const ExactRat& v) {
    return NfElem(std::move(K), PolyQ::constant(v));
}

NfElem NfElem::generator(NumberFieldPtr K) { return NfElem(std::move(K), PolyQ::var()); }

ExactRat NfElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("NfElem: not a rational element");
    return r_.coeff(0);
}

bool NfElem::operator==(const NfElem& o) const {
    if (K_.get() != o.K_.get() && K_->minpoly_primitive() != o.K_->minpoly_primitive())
        return false;
    return r_ == o.r_;
}

NfElem NfElem::operator+(const NfElem& o) const {
    check_same(K_, o.K_);
    return NfElem(K_, r_ + o.r_);
}
NfElem NfElem::operator-(const NfElem& o) const {
    check_same(K_, o.K_);
    return NfElem(K_, r_ - o.r_);
}
NfElem NfElem::operator-() const { return NfElem(K_, -r_); }
NfElem NfElem::operator*(const NfElem& o) const {
    check_same(K_, o.K_);
    return NfElem(K_, r_ * o.r_);
}

NfElem NfElem::inverse() const {
    if (is_zero()) throw std::domain_error("nf_invert: zero element");
    PolyQ g, s, t;
    poly_xgcd(r_, K_->minpoly_monic(), g, s, t);
    if (g.degree() != 0)
        throw std::runtime_error("nf_invert: representative shares a factor with the minpoly");
    return NfElem(K_, s * (ExactRat(1) / g.lc()));
}

NfElem NfElem::pow(unsigned long e) const {
    NfElem r = from_rational(K_, 1);
    NfElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

ExactRat NfElem::norm() const {
    int d = K_->degree();
    if (d == 1) return r_.coeff(0);
    // determinant of multiplication by this element in the power basis
    std::vector<std::vector<ExactRat>> m(d, std::vector<ExactRat>(d));
    PolyQ col = r_;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
        col = poly_mod(col.shift_up(1), K_->minpoly_monic());
    }
    ExactRat det = 1;
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int r = c; r < d; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return ExactRat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        ExactRat inv = ExactRat(1) / m[c][c];
        for (int r = c + 1; r < d; ++r) {
            if (m[r][c] == 0) continue;
            ExactRat fac = m[r][c] * inv;
            for (int k = c; k < d; ++k) m[r][k] -= fac * m[c][k];
        }
    }
    return det;
}

NfElem nf_invert(const NfElem& x) { return x.inverse(); }

// ---- NfPoly ----

void NfPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NfPoly::NfPoly(NumberFieldPtr K, std::vector<PolyQ> coeffs) : K_(std::move(K)) {
    c_.reserve(coeffs.size());
    for (auto& r : coeffs) c_.push_back(poly_mod(r, K_->minpoly_monic()));
    trim();
}

NfPoly NfPoly::from_rational(NumberFieldPtr K, const PolyQ& f) {
    std::vector<PolyQ> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = PolyQ::constant(f.coeffs()[i]);
    return NfPoly(std::move(K), std::move(c));
}

NfPoly NfPoly::binomial(const NfElem& alpha, long n) {
    if (n < 1) throw std::domain_error("binomial: n must be >= 1");
    std::vector<PolyQ> c(n + 1);
    c[0] = -alpha.repr();
    c[n] = PolyQ::constant(ExactRat(1));
    return NfPoly(alpha.field(), std::move(c));
}

NfElem NfPoly::coeff(long i) const {
    if (i < 0 || i >= (long)c_.size()) return NfElem::from_rational(K_, 0);
    return NfElem(K_, c_[i]);
}

NfElem NfPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return NfElem(K_, c_.back());
}

bool NfPoly::operator==(const NfPoly& o) const { return c_ == o.c_; }

NfPoly NfPoly::operator+(const NfPoly& o) const {
    check_same(K_, o.K_);
    std::vector<PolyQ> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return NfPoly(K_, std::move(r));
}

NfPoly NfPoly::operator-(const NfPoly& o) const {
    check_same(K_, o.K_);
    std::vector<PolyQ> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return NfPoly(K_, std::move(r));
}

NfPoly NfPoly::operator*(const NfPoly& o) const {
    check_same(K_, o.K_);
    if (c_.empty() || o.c_.empty()) return NfPoly(K_);
    std::vector<PolyQ> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return NfPoly(K_, std::move(r));
}

NfPoly NfPoly::operator*(const NfElem& s) const {
    std::vector<PolyQ> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s.repr();
    return NfPoly(K_, std::move(r));
}

NfElem NfPoly::evaluate(const NfElem& x) const {
    NfElem acc = NfElem::from_rational(K_, 0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + NfElem(K_, c_[i]);
    return acc;
}

NfPoly NfPoly::derivative() const {
    if (c_.size() <= 1) return NfPoly(K_);
    std::vector<PolyQ> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * ExactRat((long)i);
    return NfPoly(K_, std::move(r));
}

NfPoly NfPoly::make_monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

NfPoly NfPoly::shift_arg(const NfElem& c) const {
    NfPoly lin(K_, {c.repr(), PolyQ::constant(ExactRat(1))}); // t + c
    NfPoly acc(K_);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * lin + NfPoly(K_, {c_[i]});
    return acc;
}

std::pair<NfPoly, NfPoly> nf_divrem(const NfPoly& f, const NfPoly& g) {
    check_same(f.field(), g.field());
    if (g.is_zero()) throw std::domain_error("nf_divrem: division by zero polynomial");
    const NumberFieldPtr& K = f.field();
    const PolyQ& h = K->minpoly_monic();
    NfElem lcinv = g.lc().inverse();
    std::vector<PolyQ> r(f.coeffs_raw());
    int dg = g.degree();
    std::vector<PolyQ> q(r.size() > (size_t)dg ? r.size() - dg : 1);
    while ((int)r.size() - 1 >= dg && !r.empty()) {
        PolyQ c = poly_mod(r.back() * lcinv.repr(), h);
        size_t shift = r.size() - 1 - dg;
        q[shift] = c;
        for (int i = 0; i <= dg; ++i)
            r[i + shift] = poly_mod(r[i + shift] - c * g.coeffs_raw()[i], h);
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return {NfPoly(K, std::move(q)), NfPoly(K, std::move(r))};
}

NfPoly nf_gcd(NfPoly a, NfPoly b) {
    while (!b.is_zero()) {
        NfPoly r = nf_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

// ---- Trager factorization ----

namespace {

// Newton interpolation through integer nodes 0..n
PolyQ interpolate(const std::vector<ExactRat>& values) {
    size_t n = values.size();
    std::vector<ExactRat> dd(values); // divided differences, in place
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / ExactRat((long)level);
    PolyQ result;
    PolyQ basis = PolyQ::constant(ExactRat(1));
    for (size_t i = 0; i < n; ++i) {
        result += basis * dd[i];
        PolyQ node({ExactRat(-(long)i), ExactRat(1)}); // t - i
        basis *= node;
    }
    return result;
}

} // namespace

PolyQ nf_norm_poly(const NfPoly& f) {
    long D = (long)f.field()->degree() * f.degree();
    std::vector<ExactRat> vals(D + 1);
    for (long c = 0; c <= D; ++c)
        vals[c] = f.evaluate(NfElem::from_rational(f.field(), ExactRat(c))).norm();
    PolyQ N = interpolate(vals);
    if (N.degree() != D)
        throw std::runtime_error("norm_poly: unexpected norm degree");
    return N;
}

namespace {

std::vector<NfPoly> trager_squarefree(const NfPoly& g_in) {
    const NumberFieldPtr& K = g_in.field();
    NfPoly g = g_in.make_monic();
    if (g.degree() == 1) return {g};
    NfElem alpha = NfElem::generator(K);
    long shift = 0;
    PolyQ N;
    for (int attempt = 0;; ++attempt) {
        shift = attempt == 0 ? 0 : (attempt % 2 ? (attempt + 1) / 2 : -(attempt / 2));
        NfElem c = NfElem::from_rational(K, ExactRat(-shift)) * alpha;
        NfPoly gs = g.shift_arg(c); // g(t - shift*alpha)
        N = nf_norm_poly(gs);
        if (poly_gcd(N, N.derivative()).degree() == 0) break;
        if (attempt > 40)
            throw std::runtime_error("trager_factor: no squarefree shift found");
    }
    FactorizationQ nf = factor_over_q(N);
    std::vector<NfPoly> out;
    NfPoly rest = g;
    NfElem salpha = NfElem::from_rational(K, ExactRat(shift)) * alpha;
    for (const auto& [Ni, mult] : nf.factors) {
        (void)mult; // N squarefree
        if (rest.degree() < 1) break;
        NfPoly shifted = NfPoly::from_rational(K, to_rational(Ni)).shift_arg(salpha);
        NfPoly gi = nf_gcd(rest, shifted);
        if (gi.degree() >= 1) {
            out.push_back(gi);
            rest = nf_divrem(rest, gi).first;
        }
    }
    int total = 0;
    for (const auto& p : out) total += p.degree();
    if (total != g.degree() || rest.degree() != 0)
        throw std::runtime_error("trager_factor: factors do not cover the input");
    return out;
}

bool nfpoly_less(const NfPoly& a, const NfPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const PolyQ& x = a.coeffs_raw()[i];
        const PolyQ& y = b.coeffs_raw()[i];
        if (x == y) continue;
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (int j = x.degree(); j >= 0; --j)
            if (x.coeff(j) != y.coeff(j)) return x.coeff(j) < y.coeff(j);
    }
    return false;
}

} // namespace

std::vector<std::pair<NfPoly, int>> trager_factor(const NfPoly& f) {
    if (f.is_zero()) throw std::domain_error("trager_factor: zero polynomial");
    const NumberFieldPtr& K = f.field();
    std::vector<std::pair<NfPoly, int>> out;
    if (f.degree() == 0) return out;

    if (K->is_rational()) {
        std::vector<ExactRat> flat(f.coeffs_raw().size());
        for (size_t i = 0; i < flat.size(); ++i) flat[i] = f.coeffs_raw()[i].coeff(0);
        FactorizationQ fq = factor_over_q(PolyQ(std::move(flat)));
        for (const auto& [g, m] : fq.factors)
            out.emplace_back(NfPoly::from_rational(K, make_monic(to_rational(g))), m);
    } else {
        NfPoly fm = f.make_monic();
        // Yun squarefree decomposition over K (characteristic 0)
        NfPoly d = fm.derivative();
        NfPoly g = nf_gcd(fm, d);
        NfPoly w = nf_divrem(fm, g).first;
        NfPoly s = nf_divrem(d, g).first;
        int i = 1;
        while (w.degree() >= 1) {
            NfPoly y = s - w.derivative();
            NfPoly h = y.is_zero() ? w.make_monic() : nf_gcd(w, y);
            if (h.degree() >= 1)
                for (const auto& irr : trager_squarefree(h)) out.emplace_back(irr, i);
            w = nf_divrem(w, h).first;
            s = y.is_zero() ? NfPoly(K) : nf_divrem(y, h).first;
            ++i;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return nfpoly_less(a.first, b.first); });
    // product reconstruction
    NfPoly prod(K, {f.lc().repr()});
    for (const auto& [g, m] : out)
        for (int j = 0; j < m; ++j) prod = prod * g;
    if (!(prod == f)) throw std::runtime_error("trager_factor: product reconstruction failed");
    return out;
}

// ---- binomial factorization and lambda ----

BinomialFactorization factor_binomial(const NfElem& alpha, long n) {
    if (n < 1) throw std::domain_error("factor_binomial: n must be >= 1");
    const NumberFieldPtr& K = alpha.field();
    BinomialFactorization out{alpha, n, {}, {}, 1};
    if (alpha.is_zero()) {
        NfPoly t(K, {PolyQ(), PolyQ::constant(ExactRat(1))});
        for (long i = 0; i < n; ++i) {
            out.degrees.push_back(1);
            out.factors.push_back(t);
        }
        out.lambda = 1;
        return out;
    }
    NfPoly f = NfPoly::binomial(alpha, n);
    auto facs = trager_factor(f);
    for (const auto& [g, m] : facs)
        for (int j = 0; j < m; ++j) {
            out.degrees.push_back(g.degree());
            out.factors.push_back(g);
        }
    std::sort(out.degrees.begin(), out.degrees.end());
    out.lambda = out.degrees.front();
    long total = 0;
    for (long d : out.degrees) {
        total += d;
        if (d % out.lambda != 0)
            throw std::logic_error("factor_binomial: minimal-degree divisibility violated");
    }
    if (total != n) throw std::logic_error("factor_binomial: factor degrees do not sum to n");
    return out;
}

std::optional<RootOfUnity> as_root_of_unity(const NfElem& alpha) {
    const NumberFieldPtr& K = alpha.field();
    long N = K->cyclotomic_index();
    if (N == 0) return std::nullopt;
    if (K->degree() == 1) {
        if (!alpha.is_rational()) return std::nullopt;
        ExactRat v = alpha.rational_value();
        if (v == 1) return RootOfUnity{1, 2, 0};
        if (v == -1) return RootOfUnity{1, 2, 1};
        return std::nullopt;
    }
    long L = N % 2 ? 2 * N : N;
    long step = L / N;
    NfElem cur = NfElem::from_rational(K, 1);
    NfElem x = NfElem::generator(K);
    for (long j = 0; j < N; ++j) {
        if (alpha == cur) return RootOfUnity{N, L, (j * step) % L};
        if (alpha == -cur) return RootOfUnity{N, L, (j * step + L / 2) % L};
        cur = cur * x;
    }
    return std::nullopt;
}

long lambda_root_of_unity(const RootOfUnity& r, long n) {
    long M = n * r.L;
    long phiN = euler_phi(r.N);
    long best = LONG_MAX;
    for (long k = 0; k < n; ++k) {
        long m = (r.w + k * r.L) % M;
        long ord = M / gcd_l(m, M);
        long deg = euler_phi(lcm_l(ord, r.N)) / phiN;
        best = std::min(best, deg);
    }
    return best;
}

std::vector<long> degrees_root_of_unity(const RootOfUnity& r, long n) {
    long M = n * r.L;
    long phiN = euler_phi(r.N);
    std::map<long, long> root_count;
    for (long k = 0; k < n; ++k) {
        long m = (r.w + k * r.L) % M;
        long ord = M / gcd_l(m, M);
        ++root_count[euler_phi(lcm_l(ord, r.N)) / phiN];
    }
    std::vector<long> degrees;
    for (auto [deg, cnt] : root_count) {
        if (cnt % deg != 0)
            throw std::logic_error("degrees_root_of_unity: orbit count mismatch");
        for (long i = 0; i < cnt / deg; ++i) degrees.push_back(deg);
    }
    return degrees;
}

long lambda_value(const NfElem& alpha, long n) {
    if (n < 1) throw std::domain_error("lambda_value: n must be >= 1");
    if (alpha.is_zero()) return 1;
    if (auto r = as_root_of_unity(alpha)) return lambda_root_of_unity(*r, n);
    return factor_binomial(alpha, n).lambda;
}

bool check_multiplicativity(const NfElem& alpha, long m, long n) {
    if (gcd_l(m, n) != 1)
        throw std::domain_error("check_multiplicativity: m and n must be coprime");
    return lambda_value(alpha, m) * lambda_value(alpha, n) == lambda_value(alpha, m * n);
}

} // namespace binom
