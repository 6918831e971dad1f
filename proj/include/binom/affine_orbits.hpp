#ifndef BINOM_AFFINE_ORBITS_HPP
#define BINOM_AFFINE_ORBITS_HPP

#include <optional>
#include <vector>

#include "binom/ints.hpp"

namespace binom {

// Element [a b; 0 1] of U(n): a a unit mod n, b arbitrary mod n.
struct AffineElem {
    long n, a, b;

    AffineElem(long n_, long a_, long b_); // validates gcd(a,n)=1, reduces mod n
    static AffineElem identity(long n) { return AffineElem(n, 1, 0); }

    long det() const { return a; } // image in (Z/n)^x

    AffineElem compose(const AffineElem& o) const; // this after o: (a*o.a, a*o.b + b)
    AffineElem inverse() const;

    bool operator==(const AffineElem& o) const { return n == o.n && a == o.a && b == o.b; }
    bool operator<(const AffineElem& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// Point [j; 1] of S(n).
struct SPoint {
    long n, j;
    SPoint(long n_, long j_);
    bool operator==(const SPoint& o) const { return n == o.n && j == o.j; }
};

SPoint act(const AffineElem& g, const SPoint& v);

struct AffineSubgroup {
    long n;
    std::vector<AffineElem> elements; // sorted, unique, contains identity
    size_t order() const { return elements.size(); }
};

AffineSubgroup subgroup_closure(long n, const std::vector<AffineElem>& generators);
AffineSubgroup full_group(long n); // U(n) itself

// Every subgroup of U(n), deduplicated; throws when n exceeds the configured
// enumeration bound.
std::vector<AffineSubgroup> enumerate_subgroups(long n);

struct OrbitReport {
    AffineSubgroup subgroup;
    std::vector<std::vector<long>> orbits; // partition of {0..n-1}, each sorted
    long lambda;                           // minimal orbit size
    bool divisibility_ok;                  // lambda divides every orbit size
};

OrbitReport orbit_report(const AffineSubgroup& G);

// Fixed point j = -b/(a-1) mod p^l when a-1 is a unit; nullopt otherwise.
// Requires n = p^l with p an odd prime.
std::optional<SPoint> prime_power_fixed_point(const AffineElem& g);

// For n = m * q with gcd(m, q) = 1 and q a prime power (or 1): checks, for
// every v in S(n), lcm(orbit sizes of the reductions) | orbit size <= their
// product, plus lambda(G) = lambda(G_m) * lambda(G_q).
bool crt_relations_check(const AffineSubgroup& G, long m, long q);

// Reduction U(n) -> U(m) for m | n, applied elementwise.
AffineSubgroup reduce_subgroup(const AffineSubgroup& G, long m);

} // namespace binom

#endif
