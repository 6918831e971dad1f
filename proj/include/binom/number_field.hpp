#ifndef BINOM_NUMBER_FIELD_HPP
#define BINOM_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "binom/factor.hpp"
#include "binom/poly.hpp"

namespace binom {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// K = Q[x]/(h) for h irreducible over Q. Degree 1 means K = Q.
class NumberField {
public:
    // verifies irreducibility (throws std::domain_error otherwise)
    static NumberFieldPtr create(const PolyZ& minpoly);
    // caller guarantees irreducibility (e.g. output of factor_over_q)
    static NumberFieldPtr create_unchecked(const PolyZ& minpoly);
    static NumberFieldPtr rationals();
    static NumberFieldPtr cyclotomic_field(long N);

    int degree() const { return h_.degree(); }
    bool is_rational() const { return degree() == 1; }
    const PolyQ& minpoly_monic() const { return h_; }
    const PolyZ& minpoly_primitive() const { return h_prim_; }
    // N with h == Phi_N; 1 when K = Q; 0 when the field is not cyclotomic
    long cyclotomic_index() const { return cyclo_; }

protected:
    NumberField(PolyQ h, PolyZ hp, long cyclo)
        : h_(std::move(h)), h_prim_(std::move(hp)), cyclo_(cyclo) {}

private:
    PolyQ h_;
    PolyZ h_prim_;
    long cyclo_;
};

// Element of K, stored as its reduced representative of degree < [K:Q].
class NfElem {
public:
    NfElem(NumberFieldPtr K, PolyQ repr);
    static NfElem from_rational(NumberFieldPtr K, const ExactRat& v);
    static NfElem generator(NumberFieldPtr K); // class of x

    const NumberFieldPtr& field() const { return K_; }
    const PolyQ& repr() const { return r_; }
    bool is_zero() const { return r_.is_zero(); }
    bool is_rational() const { return r_.degree() <= 0; }
    ExactRat rational_value() const; // requires is_rational()

    bool operator==(const NfElem& o) const;
    bool operator!=(const NfElem& o) const { return !(*this == o); }

    NfElem operator+(const NfElem& o) const;
    NfElem operator-(const NfElem& o) const;
    NfElem operator-() const;
    NfElem operator*(const NfElem& o) const;
    NfElem inverse() const; // throws on zero
    NfElem pow(unsigned long e) const;

    ExactRat norm() const; // determinant of the multiplication map

private:
    NumberFieldPtr K_;
    PolyQ r_;
};

// Dense polynomial in t with coefficients in a fixed number field.
class NfPoly {
public:
    explicit NfPoly(NumberFieldPtr K) : K_(std::move(K)) {}
    NfPoly(NumberFieldPtr K, std::vector<PolyQ> coeffs);
    static NfPoly from_rational(NumberFieldPtr K, const PolyQ& f);
    static NfPoly binomial(const NfElem& alpha, long n); // t^n - alpha

    const NumberFieldPtr& field() const { return K_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    NfElem coeff(long i) const;
    NfElem lc() const;

    bool operator==(const NfPoly& o) const;
    NfPoly operator+(const NfPoly& o) const;
    NfPoly operator-(const NfPoly& o) const;
    NfPoly operator*(const NfPoly& o) const;
    NfPoly operator*(const NfElem& s) const;

    NfElem evaluate(const NfElem& x) const;
    NfPoly derivative() const;
    NfPoly make_monic() const;
    // f(t + c) for c in K
    NfPoly shift_arg(const NfElem& c) const;

    const std::vector<PolyQ>& coeffs_raw() const { return c_; }

private:
    std::vector<PolyQ> c_; // index i = coefficient of t^i, each reduced mod h
    NumberFieldPtr K_;
    void trim();
    friend std::pair<NfPoly, NfPoly> nf_divrem(const NfPoly&, const NfPoly&);
};

std::pair<NfPoly, NfPoly> nf_divrem(const NfPoly& f, const NfPoly& g);
NfPoly nf_gcd(NfPoly a, NfPoly b); // monic

NfElem nf_invert(const NfElem& x);

// Norm from K[t] down to Q[t]: the product of the coefficientwise conjugates
// of f, computed by evaluation at integer points and interpolation.
PolyQ nf_norm_poly(const NfPoly& f);

// Complete factorization over K into monic irreducibles; the leading
// coefficient of f is the implied unit.
std::vector<std::pair<NfPoly, int>> trager_factor(const NfPoly& f);

struct BinomialFactorization {
    NfElem alpha;
    long n;
    std::vector<long> degrees; // sorted ascending, with multiplicity
    std::vector<NfPoly> factors;
    long lambda;
};

BinomialFactorization factor_binomial(const NfElem& alpha, long n);

// Minimal factor degree of t^n - alpha over alpha's field; uses the pure
// integer-arithmetic route when alpha is a root of unity in a cyclotomic
// presentation of K, and the Trager route otherwise.
long lambda_value(const NfElem& alpha, long n);

// alpha expressed as a root of unity: alpha = zeta_L^w where L = lcm(2, N)
// and N is the cyclotomic index of the field.
struct RootOfUnity {
    long N, L, w;
};
std::optional<RootOfUnity> as_root_of_unity(const NfElem& alpha);
long lambda_root_of_unity(const RootOfUnity& r, long n);
std::vector<long> degrees_root_of_unity(const RootOfUnity& r, long n);

// Multiplicativity check: lambda(alpha,m) * lambda(alpha,n) == lambda(alpha,mn)
bool check_multiplicativity(const NfElem& alpha, long m, long n);

} // namespace binom

#endif
