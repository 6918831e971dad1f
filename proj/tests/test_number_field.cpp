#include <doctest.h>

#include <random>

#include "binom/number_field.hpp"
#include "binom/parse.hpp"
#include "oracles.hpp"

using namespace binom;

namespace {

PolyZ pz(const std::string& s) { return parse_poly(s, 'x'); }
PolyZ pt(const std::string& s) { return parse_poly(s, 't'); }

NfPoly nf_from_string(const NumberFieldPtr& K, const std::string& s) {
    return NfPoly::from_rational(K, to_rational(pt(s)));
}

} // namespace

TEST_CASE("field construction and cyclotomic detection") {
    auto Q = NumberField::rationals();
    CHECK(Q->degree() == 1);
    CHECK(Q->is_rational());
    CHECK(Q->cyclotomic_index() == 1);

    auto K2 = NumberField::create(pz("x^2-2"));
    CHECK(K2->degree() == 2);
    CHECK(K2->cyclotomic_index() == 0);

    auto Ki = NumberField::create(pz("x^2+1"));
    CHECK(Ki->cyclotomic_index() == 4);

    auto K5 = NumberField::cyclotomic_field(5);
    CHECK(K5->degree() == 4);
    CHECK(K5->cyclotomic_index() == 5);
    CHECK(K5->minpoly_primitive() == cyclotomic(5));

    CHECK(NumberField::cyclotomic_field(1)->is_rational());
    CHECK(NumberField::cyclotomic_field(2)->is_rational());

    CHECK_THROWS_AS(NumberField::create(pz("x^2-1")), std::domain_error);
    CHECK_THROWS_AS(NumberField::create(pz("7")), std::domain_error);
}

TEST_CASE("element arithmetic and inversion in Q(sqrt 2)") {
    auto K = NumberField::create(pz("x^2-2"));
    NfElem a = NfElem::generator(K); // sqrt(2)
    CHECK((a * a).rational_value() == 2);
    CHECK(a.pow(4).rational_value() == 4);

    // (1 + sqrt2)^-1 = sqrt2 - 1
    NfElem u = NfElem::from_rational(K, 1) + a;
    NfElem v = nf_invert(u);
    CHECK(v == a - NfElem::from_rational(K, 1));
    CHECK((u * v).rational_value() == 1);

    CHECK_THROWS_AS(nf_invert(NfElem::from_rational(K, 0)), std::domain_error);

    // norms: N(a + b*sqrt2) = a^2 - 2 b^2
    CHECK(a.norm() == -2);
    CHECK(u.norm() == -1);
    CHECK(NfElem::from_rational(K, ExactRat(3, 2)).norm() == ExactRat(9, 4));
}

TEST_CASE("inversion in Q(i)") {
    auto K = NumberField::create(pz("x^2+1"));
    NfElem i = NfElem::generator(K);
    // (3 + 4i)^-1 = (3 - 4i)/25
    NfElem z = NfElem::from_rational(K, 3) + i * NfElem::from_rational(K, 4);
    NfElem w = z.inverse();
    CHECK((z * w).rational_value() == 1);
    CHECK(w.repr() == to_rational(pz("-4*x+3")) * ExactRat(1, 25));
    CHECK(z.norm() == 25);
}

TEST_CASE("nf polynomial division and gcd") {
    auto K = NumberField::create(pz("x^2-2"));
    NfElem a = NfElem::generator(K);
    // f = (t - sqrt2)(t + sqrt2) = t^2 - 2
    NfPoly t(K, {PolyQ(), PolyQ::constant(1)});
    NfPoly f = nf_from_string(K, "t^2-2");
    NfPoly g = t - NfPoly(K, {a.repr()}); // t - sqrt2
    auto [q, r] = nf_divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == t + NfPoly(K, {a.repr()}));
    CHECK(nf_gcd(f, g) == g);
    CHECK(nf_gcd(f, nf_from_string(K, "t^2+1")).degree() == 0);
}

TEST_CASE("trager: t^2 - 2 splits over Q(sqrt 2)") {
    auto K = NumberField::create(pz("x^2-2"));
    auto facs = trager_factor(nf_from_string(K, "t^2-2"));
    REQUIRE(facs.size() == 2);
    CHECK(facs[0].first.degree() == 1);
    CHECK(facs[1].first.degree() == 1);
    NfElem a = NfElem::generator(K);
    CHECK(facs[0].first.evaluate(a).is_zero() != facs[0].first.evaluate(-a).is_zero());
}

TEST_CASE("trager: t^4 - 2 over Q(sqrt 2) -> two quadratics") {
    auto K = NumberField::create(pz("x^2-2"));
    auto facs = trager_factor(nf_from_string(K, "t^4-2"));
    REQUIRE(facs.size() == 2);
    CHECK(facs[0].first.degree() == 2);
    CHECK(facs[1].first.degree() == 2);
    // they are t^2 - sqrt2 and t^2 + sqrt2
    NfElem a = NfElem::generator(K);
    NfPoly t2(K, {PolyQ(), PolyQ(), PolyQ::constant(1)});
    NfPoly p = t2 - NfPoly(K, {a.repr()});
    NfPoly m = t2 + NfPoly(K, {a.repr()});
    CHECK(((facs[0].first == p && facs[1].first == m) ||
           (facs[0].first == m && facs[1].first == p)));
}

TEST_CASE("trager handles repeated factors and units") {
    auto K = NumberField::create(pz("x^2-2"));
    NfPoly f = nf_from_string(K, "t^2-2") * nf_from_string(K, "t^2-2") *
               nf_from_string(K, "t^2+1") * NfElem::from_rational(K, ExactRat(3, 7));
    auto facs = trager_factor(f);
    long total = 0;
    for (auto& [g, m] : facs) {
        CHECK(g.lc().rational_value() == 1);
        total += (long)g.degree() * m;
    }
    CHECK(total == 6);
    // t - sqrt2 and t + sqrt2 each appear squared, t^2 + 1 stays irreducible
    int squared = 0, quad = 0;
    for (auto& [g, m] : facs) {
        if (g.degree() == 1) {
            CHECK(m == 2);
            ++squared;
        } else {
            CHECK(m == 1);
            CHECK(g.degree() == 2);
            ++quad;
        }
    }
    CHECK(squared == 2);
    CHECK(quad == 1);
}

TEST_CASE("trager over Q agrees with rational factorization") {
    auto Q = NumberField::rationals();
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 50; ++iter) {
        int d1 = 1 + (int)(rng() % 3), d2 = 1 + (int)(rng() % 3);
        std::vector<ExactInt> c1(d1 + 1), c2(d2 + 1);
        for (auto& c : c1) c = coeff(rng);
        for (auto& c : c2) c = coeff(rng);
        c1.back() = 1 + std::abs(coeff(rng));
        c2.back() = 1 + std::abs(coeff(rng));
        PolyZ f = PolyZ(c1) * PolyZ(c2);
        FactorizationQ ref = factor_over_q(f);
        auto facs = trager_factor(NfPoly::from_rational(Q, to_rational(f)));
        REQUIRE(facs.size() == ref.factors.size());
        // same multiset of (monic factor, multiplicity)
        auto key = [](const PolyQ& p, int m) {
            std::vector<std::pair<ExactRat, int>> k;
            for (auto& c : p.coeffs()) k.emplace_back(c, m);
            return k;
        };
        std::vector<std::vector<std::pair<ExactRat, int>>> got, want;
        for (auto& [g, m] : facs) {
            std::vector<ExactRat> flat;
            for (auto& cf : g.coeffs_raw()) flat.push_back(cf.coeff(0));
            got.push_back(key(PolyQ(flat), m));
        }
        for (auto& [g, m] : ref.factors) want.push_back(key(make_monic(to_rational(g)), m));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("factor_binomial examples over Q") {
    auto Q = NumberField::rationals();
    auto r4 = factor_binomial(NfElem::from_rational(Q, 4), 4);
    CHECK(r4.degrees == std::vector<long>{2, 2});
    CHECK(r4.lambda == 2);

    auto r6 = factor_binomial(NfElem::from_rational(Q, 4), 6);
    CHECK(r6.degrees == std::vector<long>{3, 3});
    CHECK(r6.lambda == 3);

    auto r5 = factor_binomial(NfElem::from_rational(Q, 1), 5);
    CHECK(r5.degrees == std::vector<long>{1, 4});
    CHECK(r5.lambda == 1);

    auto r26 = factor_binomial(NfElem::from_rational(Q, 2), 6);
    CHECK(r26.degrees == std::vector<long>{6});
    CHECK(r26.lambda == 6);

    auto rz = factor_binomial(NfElem::from_rational(Q, 0), 3);
    CHECK(rz.degrees == std::vector<long>{1, 1, 1});
    CHECK(rz.lambda == 1);

    CHECK_THROWS_AS(factor_binomial(NfElem::from_rational(Q, 2), 0), std::domain_error);
}

TEST_CASE("lambda over extensions") {
    auto Q = NumberField::rationals();
    CHECK(lambda_value(NfElem::from_rational(Q, 2), 6) == 6);

    auto K = NumberField::create(pz("x^2-2"));
    NfElem sqrt2 = NfElem::generator(K);
    CHECK(lambda_value(sqrt2, 4) == 4);
    CHECK(lambda_value(sqrt2, 2) == 2);
    CHECK(lambda_value(NfElem::from_rational(K, 2), 2) == 1); // 2 = (sqrt2)^2

    auto K5 = NumberField::cyclotomic_field(5);
    NfElem z5 = NfElem::generator(K5);
    CHECK(lambda_value(z5, 5) == 5);
    CHECK(lambda_value(z5, 2) == 1); // zeta5 = (zeta5^3)^2
}

TEST_CASE("root-of-unity recognition") {
    auto Q = NumberField::rationals();
    auto one = as_root_of_unity(NfElem::from_rational(Q, 1));
    REQUIRE(one.has_value());
    CHECK(one->N == 1);
    CHECK(one->L == 2);
    CHECK(one->w == 0);
    auto neg = as_root_of_unity(NfElem::from_rational(Q, -1));
    REQUIRE(neg.has_value());
    CHECK(neg->w == 1);
    CHECK(!as_root_of_unity(NfElem::from_rational(Q, 2)).has_value());

    auto K8 = NumberField::cyclotomic_field(8);
    NfElem z = NfElem::generator(K8);
    auto r = as_root_of_unity(z.pow(3));
    REQUIRE(r.has_value());
    CHECK(r->N == 8);
    CHECK(r->L == 8);
    CHECK(r->w == 3);
    auto rm = as_root_of_unity(-z);
    REQUIRE(rm.has_value());
    CHECK(rm->w == 5); // -zeta8 = zeta8^5
    CHECK(!as_root_of_unity(z + z).has_value());

    auto K3 = NumberField::cyclotomic_field(3);
    auto r3 = as_root_of_unity(NfElem::generator(K3));
    REQUIRE(r3.has_value());
    CHECK(r3->N == 3);
    CHECK(r3->L == 6);
    CHECK(r3->w == 2); // zeta3 = zeta6^2
}

TEST_CASE("cyclotomic fast path matches trager") {
    for (long N : {1L, 3L, 4L, 5L, 8L, 12L}) {
        auto K = NumberField::cyclotomic_field(N);
        NfElem z = N <= 2 ? NfElem::from_rational(K, N == 2 ? -1 : 1)
                          : NfElem::generator(K);
        for (long n = 2; n <= 6; ++n) {
            auto r = as_root_of_unity(z);
            REQUIRE(r.has_value());
            std::vector<long> fast = degrees_root_of_unity(*r, n);
            auto slow = factor_binomial(z, n);
            CHECK(fast == slow.degrees);
            CHECK(lambda_root_of_unity(*r, n) == slow.lambda);
        }
    }
}

TEST_CASE("multiplicativity for coprime exponents") {
    auto Q = NumberField::rationals();
    for (long a : {2L, 3L, 4L, -2L, 9L}) {
        NfElem alpha = NfElem::from_rational(Q, a);
        CHECK(check_multiplicativity(alpha, 2, 3));
        CHECK(check_multiplicativity(alpha, 3, 4));
        CHECK(check_multiplicativity(alpha, 2, 5));
    }
    auto K = NumberField::create(pz("x^2-2"));
    CHECK(check_multiplicativity(NfElem::generator(K), 2, 3));
    CHECK_THROWS_AS(check_multiplicativity(NfElem::from_rational(Q, 2), 2, 4),
                    std::domain_error);
}

TEST_CASE("minimal degree divides every factor degree (sweep)") {
    auto Q = NumberField::rationals();
    for (long a = -6; a <= 6; ++a) {
        if (a == 0) continue;
        for (long n = 1; n <= 8; ++n) {
            auto r = factor_binomial(NfElem::from_rational(Q, a), n);
            long sum = 0;
            for (long d : r.degrees) {
                CHECK(d % r.lambda == 0);
                sum += d;
            }
            CHECK(sum == n);
        }
    }
}

TEST_CASE("trager factors agree with exhaustive oracle over Q(i)") {
    // factors of t^4 + 4 over Q(i): (t^2 - 2i)(t^2 + 2i) -> then each splits:
    // t^4 + 4 = (t-1-i)(t-1+i)(t+1-i)(t+1+i)
    auto K = NumberField::create(pz("x^2+1"));
    auto facs = trager_factor(nf_from_string(K, "t^4+4"));
    REQUIRE(facs.size() == 4);
    NfElem i = NfElem::generator(K);
    NfElem one = NfElem::from_rational(K, 1);
    std::vector<NfElem> roots = {one + i, one - i, -one + i, -one - i};
    for (auto& root : roots) {
        bool found = false;
        for (auto& [g, m] : facs)
            if (g.evaluate(root).is_zero()) found = true;
        CHECK(found);
    }
}
