#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cymat/poly.hpp"

using namespace cymat;

namespace {
F16Poly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("poly_mul_mod") {
    F16Poly x3 = F16Poly::xn_minus_1(3);
    CHECK(poly_mul_mod(P("x+1"), P("x+1"), x3) == P("x^2+1"));
    // (x+w^5)(x+w^10) has middle coefficient w^5+w^10 = 1 and constant w^15 = 1
    CHECK(poly_mul_mod(P("x+w^5"), P("x+w^10"), x3) == P("x^2+x+1"));
    CHECK(poly_mul_mod(P("x^2+w^3x"), F16Poly::one(), x3) == P("x^2+w^3x"));
    CHECK_THROWS(poly_mul_mod(P("x"), P("x"), F16Poly::zero()));
}

TEST_CASE("division and gcd") {
    F16Poly q, r;
    F16Poly::divmod(P("x^3+1"), P("x+1"), q, r);
    CHECK(r.is_zero());
    CHECK(q == P("x^2+x+1"));
    CHECK(gcd(P("x^2+x+1"), P("x+1")).is_one());
    F16Poly s, t;
    F16Poly g = egcd(P("x^2+x+1"), P("x+w^5"), s, t);
    CHECK(g == P("x^2+x+1") * s + P("x+w^5") * t);
}

TEST_CASE("factorization reproduces the canonical lists") {
    auto f5 = factor_xn_minus_1(5);
    REQUIRE(f5.factors.size() == 5);
    CHECK(f5.at1(1).str() == "x + 1");
    CHECK(f5.at1(2).str() == "x + w^3");
    CHECK(f5.at1(3).str() == "x + w^6");
    CHECK(f5.at1(4).str() == "x + w^9");
    CHECK(f5.at1(5).str() == "x + w^12");

    auto f3 = factor_xn_minus_1(3);
    REQUIRE(f3.factors.size() == 3);
    CHECK(f3.at1(1).str() == "x + 1");
    CHECK(f3.at1(2).str() == "x + w^5");
    CHECK(f3.at1(3).str() == "x + w^10");

    auto f7 = factor_xn_minus_1(7);
    REQUIRE(f7.factors.size() == 3);
    CHECK(f7.at1(1).str() == "x + 1");
    CHECK(f7.at1(2).str() == "x^3 + x + 1");
    CHECK(f7.at1(3).str() == "x^3 + x^2 + 1");

    CHECK_THROWS(factor_xn_minus_1(4));
}

TEST_CASE("factorization properties at larger n") {
    for (int n : {9, 11, 13, 15, 17, 21}) {
        auto fs = factor_xn_minus_1(n);
        F16Poly prod = F16Poly::one();
        for (const auto& f : fs.factors) {
            CHECK(is_irreducible(f));
            CHECK(f.lead() == F16::one());
            prod = prod * f;
        }
        CHECK(prod == F16Poly::xn_minus_1(n));
        for (size_t a = 0; a < fs.factors.size(); ++a)
            for (size_t b = a + 1; b < fs.factors.size(); ++b)
                CHECK(gcd(fs.factors[a], fs.factors[b]).is_one());
    }
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(P("x+w^3"), false) == P("w^3x+1"));
    CHECK(reciprocal(P("x+w^3")) == P("x+w^12")); // monic form divides by w^3
    CHECK(reciprocal(P("x^3+x+1")) == P("x^3+x^2+1"));
    CHECK(reciprocal(P("x+1")) == P("x+1"));
    // involution on polynomials with nonzero constant term
    for (const char* s : {"x^2+w^5x+w", "x^4+w^3x+1", "w^7x^3+x+w^2"}) {
        F16Poly f = P(s);
        CHECK(reciprocal(reciprocal(f, false), false) == f);
        CHECK(reciprocal(reciprocal(f)) == f.monic());
    }
}

TEST_CASE("coefficient-wise conjugation") {
    CHECK(poly_conj(P("x+1")) == P("x+1"));
    CHECK(poly_conj(P("x+w^3")) == P("x+w^12"));
    CHECK(poly_conj(P("x+w^5")) == P("x+w^5"));
    for (const char* a : {"x^2+w^5x+w", "w^9x^3+w^2"}) {
        for (const char* b : {"x+w^7", "x^2+w^11"}) {
            CHECK(poly_conj(poly_conj(P(a))) == P(a));
            CHECK(poly_conj(P(a) * P(b)) == poly_conj(P(a)) * poly_conj(P(b)));
        }
    }
}

TEST_CASE("hat") {
    CHECK(hat(F16Poly::xn_minus_1(5), 5).is_one());
    CHECK(hat(F16Poly::one(), 5) == F16Poly::xn_minus_1(5));
    CHECK(hat(P("x+1"), 3) == P("x^2+x+1"));
    CHECK_THROWS(hat(P("x+w"), 3)); // not a divisor: remainder reported
    for (int n : {3, 5, 7}) {
        auto fs = factor_xn_minus_1(n);
        for (const auto& f : fs.factors) CHECK(hat(f, n) * f == F16Poly::xn_minus_1(n));
    }
}

TEST_CASE("canonical ordering is stable") {
    // repeated runs with different seeds give the same sorted factor lists
    auto a = factor_xn_minus_1(9, 1);
    auto b = factor_xn_minus_1(9, 999);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i] == b.factors[i]);
}

TEST_CASE("unit test for units") {
    CHECK(is_unit_mod_xn_minus_1(P("w^5"), 5));
    CHECK(!is_unit_mod_xn_minus_1(P("x+1"), 5));
    CHECK(is_unit_mod_xn_minus_1(P("x+w"), 5)); // w is not a 5th root of unity
    CHECK(!is_unit_mod_xn_minus_1(F16Poly::zero(), 5));
}
