#ifndef BINOM_GALOIS_BRIDGE_HPP
#define BINOM_GALOIS_BRIDGE_HPP

#include "binom/affine_orbits.hpp"
#include "binom/number_field.hpp"

namespace binom {

// Splitting field F = Q(zeta_n, beta) of t^n - alpha, presented through a
// primitive element theta; zeta and beta are stored as polynomials in theta.
struct SplittingField {
    PolyZ primitive_minpoly; // minimal polynomial of theta; degree = [F:Q]
    PolyQ zeta_in_theta;
    PolyQ beta_in_theta;

    // construction data, kept for the automorphism computation
    long n;
    ExactRat alpha;
    NumberFieldPtr base;  // Q(zeta_n)
    NfElem zeta;          // zeta_n inside base
    NfPoly beta_minpoly;  // minimal polynomial of beta over base (monic)
    long shift_c;         // theta = zeta + shift_c * beta (0 when beta in base)

    int field_degree() const { return primitive_minpoly.degree(); }
};

struct GaloisGroup {
    SplittingField field;
    AffineSubgroup group;
    // (a, b) together with the image of theta as a polynomial in theta
    std::vector<std::pair<AffineElem, PolyQ>> automorphisms;
};

SplittingField splitting_field(const ExactRat& alpha, long n);
GaloisGroup automorphism_group(const SplittingField& field, long n);

// true iff the minimal orbit size of the Galois group equals
// lambda_value(alpha, n) and the orbit-size multiset matches the
// factor-degree multiset of t^n - alpha over Q.
bool cross_check_lambda(const ExactRat& alpha, long n);

} // namespace binom

#endif
