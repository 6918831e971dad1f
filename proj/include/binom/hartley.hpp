#ifndef BINOM_HARTLEY_HPP
#define BINOM_HARTLEY_HPP

#include <optional>
#include <vector>

#include "binom/number_field.hpp"

namespace binom {

struct HartleyFactor {
    PolyZ h;      // irreducible primitive factor
    int s;        // multiplicity
    long lambda;  // lambda(root of h, n)
    bool divides; // lambda | s
};

struct HartleyReport {
    PolyZ input;
    long n;
    std::vector<HartleyFactor> per_factor;
    bool verdict;         // conjunction of the divides flags
    ExactRat content_unit; // input = content_unit * prod h_i^{s_i}
};

// Decides the n-Hartley condition: every irreducible factor h^s of delta
// must satisfy lambda(alpha_h, n) | s.
HartleyReport is_n_hartley(const PolyZ& delta, long n);

// prod_{j=0}^{n-1} g(zeta_n^j t) with coefficients in Q(zeta_n).
NfPoly twist_product(const PolyZ& g, long n);

// Checks delta(t^n) = sign * prod_j g(zeta_n^j t); returns the sign (+1/-1)
// on success, nullopt when g is not a witness.
std::optional<int> verify_witness(const PolyZ& delta, long n, const PolyZ& g);

// Whether [mn-Hartley] == [m-Hartley and n-Hartley]; requires gcd(m,n)=1.
bool hartley_multiplicativity(const PolyZ& delta, long m, long n);

// Alexander polynomial of the (p,q) torus knot.
PolyZ torus_knot_delta(long p, long q);

// Alexander polynomial of the (5,1)-cable of the connected sum of four
// (13,5) torus knots.
PolyZ sakuma_delta();

} // namespace binom

#endif
