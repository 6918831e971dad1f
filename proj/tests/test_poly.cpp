#include <random>

#include "binom/parse.hpp"
#include "binom/poly.hpp"
#include "doctest.h"

using namespace binom;

namespace {

PolyQ q(const std::string& s) { return to_rational(parse_poly(s, 't')); }
PolyZ z(const std::string& s) { return parse_poly(s, 't'); }

PolyQ random_poly_q(std::mt19937_64& rng, int max_deg, int height) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-height, height);
    int d = dd(rng);
    std::vector<ExactRat> c(d + 1);
    for (auto& x : c) x = ExactRat(dc(rng));
    return PolyQ(std::move(c));
}

} // namespace

TEST_CASE("poly_divrem examples") {
    auto [q1, r1] = poly_divrem(q("t^2-1"), q("t-1"));
    CHECK(q1 == q("t+1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(q("t^3"), q("t"));
    CHECK(q2 == q("t^2"));
    CHECK(r2.is_zero());

    auto [q3, r3] = poly_divrem(q("t^2+1"), q("t-3"));
    CHECK(q3 == q("t+3"));
    CHECK(r3 == q("10"));

    CHECK_THROWS_AS(poly_divrem(q("t"), PolyQ()), std::domain_error);
}

TEST_CASE("poly_divrem reconstructs f = q*g + r") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        PolyQ f = random_poly_q(rng, 8, 9);
        PolyQ g = random_poly_q(rng, 5, 9);
        if (g.is_zero()) continue;
        auto [quo, rem] = poly_divrem(f, g);
        CHECK(quo * g + rem == f);
        CHECK(rem.degree() < g.degree());
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(q("t^2-1"), q("t^3-1")) == q("t-1"));
    CHECK(poly_gcd(q("3*t^2-3"), PolyQ()) == q("t^2-1"));
    CHECK(poly_gcd(q("t^2+1"), q("t^2-1")) == q("1"));
    CHECK_THROWS_AS(poly_gcd(PolyQ(), PolyQ()), std::domain_error);
}

TEST_CASE("poly_gcd divides inputs and respects common factors") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 80; ++iter) {
        PolyQ f = random_poly_q(rng, 5, 6);
        PolyQ g = random_poly_q(rng, 5, 6);
        if (f.is_zero() && g.is_zero()) continue;
        PolyQ d = poly_gcd(f, g);
        if (!f.is_zero()) CHECK(poly_mod(f, d).is_zero());
        if (!g.is_zero()) CHECK(poly_mod(g, d).is_zero());
        PolyQ h = random_poly_q(rng, 3, 4);
        if (h.is_zero() || f.is_zero() || g.is_zero()) continue;
        CHECK(poly_gcd(f * h, g * h) == make_monic(h) * d);
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(q("t^2-2"), q("t-3")) == ExactRat(7));
    // Res(z - a, z - b) = a - b
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            PolyQ f = PolyQ::var() - PolyQ::constant(ExactRat(a));
            PolyQ g = PolyQ::var() - PolyQ::constant(ExactRat(b));
            CHECK(resultant(f, g) == ExactRat(a - b));
        }
    CHECK(resultant(q("t^2+1"), q("t^2-1")) == ExactRat(4));
    CHECK_THROWS_AS(resultant(PolyQ(), q("t")), std::domain_error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 120; ++iter) {
        PolyQ f = random_poly_q(rng, 5, 5);
        PolyQ g = random_poly_q(rng, 5, 5);
        if (f.is_zero() || g.is_zero()) continue;
        bool zero_res = resultant(f, g) == 0;
        bool common = poly_gcd(f, g).degree() >= 1;
        CHECK(zero_res == common);
    }
}

TEST_CASE("compose_power") {
    CHECK(z("t^2-t+1").compose_power(3) == z("t^6-t^3+1"));
    CHECK(z("t^4-2*t+7").compose_power(1) == z("t^4-2*t+7"));
    CHECK(z("t-1").compose_power(2) == z("t^2-1"));

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        PolyQ f = random_poly_q(rng, 4, 5);
        unsigned long m = 1 + iter % 4, n = 1 + (iter / 4) % 3;
        CHECK(f.compose_power(m).compose_power(n) == f.compose_power(m * n));
    }
}

TEST_CASE("squarefree_decompose examples") {
    auto d1 = squarefree_decompose(q("(t-1)^2*(t+2)"));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == std::pair<PolyQ, int>(q("t+2"), 1));
    CHECK(d1[1] == std::pair<PolyQ, int>(q("t-1"), 2));

    auto d2 = squarefree_decompose(q("t^2+1"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair<PolyQ, int>(q("t^2+1"), 1));

    auto d3 = squarefree_decompose(q("t^4-2*t^2+1"));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == std::pair<PolyQ, int>(q("t^2-1"), 2));
}

TEST_CASE("squarefree_decompose multiplies back") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        PolyQ f = random_poly_q(rng, 3, 4) * random_poly_q(rng, 2, 4);
        PolyQ g = random_poly_q(rng, 2, 3);
        if (!g.is_zero()) f = f * g * g;
        if (f.is_zero() || f.degree() < 1) continue;
        PolyQ prod = PolyQ::constant(ExactRat(1));
        for (const auto& [fac, mult] : squarefree_decompose(f))
            prod *= fac.pow(mult);
        CHECK(prod == make_monic(f));
    }
}

TEST_CASE("cyclotomic examples") {
    CHECK(cyclotomic(1) == z("t-1"));
    CHECK(cyclotomic(6) == z("t^2-t+1"));
    CHECK(cyclotomic(12) == z("t^4-t^2+1"));
}

TEST_CASE("cyclotomic degree sum and product identities up to 60") {
    for (long n = 1; n <= 60; ++n) {
        long degsum = 0;
        PolyZ prod = PolyZ::constant(ExactInt(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) {
                PolyZ phi = cyclotomic(d);
                CHECK(phi.degree() == euler_phi(d));
                degsum += phi.degree();
                prod *= phi;
            }
        CHECK(degsum == n);
        PolyZ tn = PolyZ::monomial(ExactInt(1), n) - PolyZ::constant(ExactInt(1));
        CHECK(prod == tn);
    }
}

TEST_CASE("content_primitive examples") {
    auto [c1, p1] = content_primitive(q("2*t^2+4"));
    CHECK(c1 == ExactRat(2));
    CHECK(p1 == z("t^2+2"));

    PolyQ half({ExactRat(-1, 2), ExactRat(1, 2)});
    auto [c2, p2] = content_primitive(half);
    CHECK(c2 == ExactRat(1, 2));
    CHECK(p2 == z("t-1"));

    auto [c3, p3] = content_primitive(q("0-3*t"));
    CHECK(c3 == ExactRat(-3));
    CHECK(p3 == z("t"));

    CHECK_THROWS_AS(content_primitive(PolyQ()), std::domain_error);
}

TEST_CASE("polynomial text round-trip") {
    const char* cases[] = {"t^4-2*t+1", "0",     "-t^3+t^2-7", "5",
                           "t",         "2*t^2", "t^6-t^3+1",  "-1"};
    for (const char* s : cases) {
        PolyZ f = parse_poly(s, 't');
        CHECK(parse_poly(poly_to_string(f, 't'), 't') == f);
    }
    CHECK(parse_poly("(t-1)*(t+1)", 't') == z("t^2-1"));
    CHECK(parse_poly(" t ^ 2 - t + 1 ", 't') == z("t^2-t+1"));
    CHECK_THROWS_AS(parse_poly("t^2 + x", 't'), ParseError);
    CHECK_THROWS_AS(parse_poly("t +", 't'), ParseError);
    CHECK_THROWS_AS(parse_poly("", 't'), ParseError);
}
