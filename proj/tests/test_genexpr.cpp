#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cymat/genexpr.hpp"

using namespace cymat;

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("tokenizer") {
    auto toks = tokenize("w^13");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].kind == Token::Sym);
    CHECK(toks[0].sym == 'w');
    CHECK(toks[1].kind == Token::Caret);
    CHECK(toks[2].kind == Token::Int);
    CHECK(toks[2].value == 13);

    // LaTeX brace residue is stripped
    auto toks2 = tokenize("w^{13}");
    REQUIRE(toks2.size() == 3);
    CHECK(toks2[2].value == 13);

    auto toks3 = tokenize("u^3v^2w^3");
    REQUIRE(toks3.size() == 9);
    CHECK(toks3[0].sym == 'u');
    CHECK(toks3[3].sym == 'v');
    CHECK(toks3[6].sym == 'w');

    auto toks4 = tokenize("f_2 f12");
    REQUIRE(toks4.size() == 2);
    CHECK(toks4[0].kind == Token::FIdx);
    CHECK(toks4[0].value == 2);
    CHECK(toks4[1].value == 12);

    CHECK_THROWS_AS(tokenize("w$3"), GenExprError);
    try {
        tokenize("w %");
    } catch (const GenExprError& e) {
        CHECK(e.pos() == 2);
    }
}

TEST_CASE("atoms and precedence") {
    auto fs = factor_xn_minus_1(5);
    const auto& ctx = RingContext::get(1);

    SUBCASE("identity and zero") {
        CHECK(parse_genexpr("1", fs, 1) == RPoly::one(5, 1));
        CHECK(parse_genexpr("0", fs, 1).is_zero());
        CHECK(parse_genexpr("2", fs, 1).is_zero()); // char 2
    }
    SUBCASE("w exponents reduce mod 15") {
        CHECK(parse_genexpr("w^15", fs, 1) == RPoly::one(5, 1));
        CHECK(parse_genexpr("w^17", fs, 1) == parse_genexpr("w^2", fs, 1));
    }
    SUBCASE("nilpotent powers collapse to zero") {
        CHECK(parse_genexpr("v^4", fs, 1).is_zero());
        CHECK(parse_genexpr("u", fs, 1).is_zero()); // k = 1
        CHECK(!parse_genexpr("u", fs, 2).is_zero());
        CHECK(parse_genexpr("u^2", fs, 2).is_zero());
    }
    SUBCASE("caret binds tighter than juxtaposition, which beats plus") {
        // w^2v = (w^2)*v, not w^(2v); and sums split terms
        auto a = parse_genexpr("w^2v + w", fs, 1);
        auto b = rp_add(rp_mul(ctx, parse_genexpr("w^2", fs, 1), parse_genexpr("v", fs, 1)),
                        parse_genexpr("w", fs, 1));
        CHECK(a == b);
        // explicit '*' is the same operator
        CHECK(parse_genexpr("w^2*v", fs, 1) == parse_genexpr("w^2v", fs, 1));
    }
    SUBCASE("parenthesized powers") {
        auto sq = parse_genexpr("(f1 + 1)^2", fs, 1);
        auto once = parse_genexpr("f1 + 1", fs, 1);
        CHECK(sq == rp_mul(ctx, once, once));
    }
    SUBCASE("product order is preserved left to right") {
        auto vw = parse_genexpr("vw^5", fs, 1);
        auto wv = parse_genexpr("w^5v", fs, 1);
        CHECK(vw != wv); // the ring is noncommutative
    }
}

TEST_CASE("w*f_1 lifts the factor") {
    auto fs = factor_xn_minus_1(5);
    auto p = parse_genexpr("w*f_1", fs, 1);
    RPoly expect = RPoly::zero(5, 1);
    expect.c[0] = RElem::monomial(1, 0, 0, F16::w_pow(1));
    expect.c[1] = RElem::monomial(1, 0, 0, F16::w_pow(1));
    CHECK(p == expect);
}

TEST_CASE("semantic errors carry positions") {
    auto fs = factor_xn_minus_1(5);
    CHECK_THROWS_AS(parse_genexpr("f_9", fs, 1), GenExprError);
    CHECK_THROWS_AS(parse_genexpr("(w + ", fs, 1), GenExprError);
    CHECK_THROWS_AS(parse_genexpr("", fs, 1), GenExprError);
    CHECK_THROWS_AS(parse_genexpr("w^", fs, 1), GenExprError);
}

TEST_CASE("the published generator strings all parse") {
    struct Fixture {
        int n, k;
        const char* text;
    };
    const Fixture rows[] = {
        {5, 1, "(w^3v^3 + w^5v^2 + w^4v + w^{13} +w )f_2 + wf_1"},
        {5, 1, "(w v+w^2v^2+vw^5)f_2"},
        {5, 3, "(wu^2v^3 + w^2u^2)f_2f_3f_1f_5 + (wu + w^5 + wv + wv^3 + wv^2)f_4f_3f_1f_5"},
        {3, 4, "(u^3v^2w^13+u^3vw^5+w^7)f_2f_1"},
        {7, 1, "(w^11 v^3+w^13v^2+w^15v)f_3"},
    };
    for (const auto& f : rows) {
        auto fs = factor_xn_minus_1(f.n);
        CHECK_NOTHROW(parse_genexpr(f.text, fs, f.k));
    }
}

TEST_CASE("format round-trips through parse") {
    SUBCASE("fixed points") {
        auto fs = factor_xn_minus_1(5);
        const auto& ctx = RingContext::get(1);
        CHECK(format_genexpr(ctx, RPoly::zero(5, 1)) == "0");
        CHECK(format_genexpr(ctx, RPoly::one(5, 1)) == "1");
        auto row1 = parse_genexpr("(w^3v^3 + w^5v^2 + w^4v + w^13 + w)f_2 + wf_1", fs, 1);
        auto back = parse_genexpr(format_genexpr(ctx, row1), fs, 1);
        CHECK(back == row1);
    }
    SUBCASE("random elements") {
        uint64_t s = 99;
        for (int n : {3, 5}) {
            auto fs = factor_xn_minus_1(n);
            for (int k : {1, 2}) {
                const auto& ctx = RingContext::get(k);
                for (int t = 0; t < 60; ++t) {
                    RPoly p = RPoly::zero(n, k);
                    for (auto& c : p.c)
                        for (auto& a : c.c) a = F16(unsigned(splitmix(s) & 0xF));
                    auto text = format_genexpr(ctx, p);
                    CHECK(parse_genexpr(text, fs, k) == p);
                }
            }
        }
    }
}
