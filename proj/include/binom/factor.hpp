#ifndef BINOM_FACTOR_HPP
#define BINOM_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "binom/poly.hpp"

namespace binom {

// Process-wide knobs, all overridable from the CLI / C API.
struct Config {
    std::uint64_t seed = 0x243f6a8885a308d3ull; // equal-degree splitting RNG
    long group_bound = 24;                      // subgroup enumeration limit
    long degree_bound = 48;                     // splitting-field degree limit
};
Config& global_config();

// unit * prod(poly_i ^ mult_i) reproduces the input exactly; factors are
// primitive irreducible integer polynomials with positive leading coefficient.
struct FactorizationQ {
    ExactRat unit;
    std::vector<std::pair<PolyZ, int>> factors;
};

// Complete factorization of f mod p into monic irreducibles (coefficients
// returned in [0, p)). Requires p prime and p not dividing lc(f).
std::vector<std::pair<PolyZ, int>> factor_mod_p(const PolyZ& f, long p,
                                                std::uint64_t seed = global_config().seed);

// Lift a pairwise-coprime monic factorization of f mod p (f squarefree mod p)
// to a factorization of f/lc(f) mod p^k. Coefficients returned in [0, p^k).
std::vector<PolyZ> hensel_lift(const PolyZ& f, const std::vector<PolyZ>& factors_mod_p,
                               long p, long k);

FactorizationQ factor_over_q(const PolyQ& f, std::uint64_t seed = global_config().seed);
FactorizationQ factor_over_q(const PolyZ& f, std::uint64_t seed = global_config().seed);

bool is_irreducible_q(const PolyQ& f);
bool is_irreducible_q(const PolyZ& f);

} // namespace binom

#endif
