#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cymat/f2linalg.hpp"
#include "cymat/rring.hpp"

using namespace cymat;

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RElem rnd(int k, uint64_t& s) {
    RElem r = RElem::zero(k);
    for (auto& c : r.c) c = F16(unsigned(splitmix(s) & 0xF));
    return r;
}

} // namespace

TEST_CASE("basis constants") {
    const auto& ctx = RingContext::get(1);
    auto I = MatForm::identity(1);
    auto E = ctx.E(), V = ctx.V(), Om = ctx.Omega();
    CHECK(E * E * E * E == I);
    CHECK(V * V * V * V == MatForm::zero(1));
    MatForm p = I;
    for (int t = 0; t < 15; ++t) p = p * Om;
    CHECK(p == I);
    MatForm p5 = I;
    for (int t = 0; t < 5; ++t) p5 = p5 * Om;
    CHECK(p5 != I);
    MatForm p3 = I;
    for (int t = 0; t < 3; ++t) p3 = p3 * Om;
    CHECK(p3 != I);
    // omega satisfies the field modulus: Omega^4 = Omega + I
    CHECK(Om * Om * Om * Om == Om + I);
}

TEST_CASE("basis rank is 16k") {
    for (int k = 1; k <= 4; ++k) CHECK(RingContext::get(k).basis_rank() == 16 * k);
}

TEST_CASE("twist exponent") {
    const auto& ctx = RingContext::get(1);
    int s = ctx.twist_exponent();
    CHECK((s == 2 || s == 4 || s == 8));
    // conjugating four times fixes Omega, and s^4 = 1 mod 15
    CHECK((s * s * s * s) % 15 == 1);
    MatForm lhs = ctx.E() * ctx.Omega();
    MatForm pw = MatForm::identity(1);
    for (int t = 0; t < s; ++t) pw = pw * ctx.Omega();
    CHECK(lhs == pw * ctx.E());
}

TEST_CASE("psi maps the named elements") {
    const auto& ctx = RingContext::get(1);
    CHECK(ctx.psi_inv(RElem::one(1)) == MatForm::identity(1));
    CHECK(ctx.psi_inv(RElem::monomial(1, 0, 0, F16::w_pow(1))) == ctx.Omega());
    CHECK(ctx.psi_inv(RElem::monomial(1, 0, 1, F16::one())) == ctx.V());
    CHECK(ctx.psi(MatForm::identity(1)) == RElem::one(1));
    CHECK(ctx.psi(MatForm::zero(1)) == RElem::zero(1));
    // e = 1 + v in characteristic 2
    CHECK(ctx.psi(ctx.E()) == RElem::one(1) + RElem::monomial(1, 0, 1, F16::one()));
}

TEST_CASE("psi round-trips and is additive") {
    uint64_t s = 17;
    for (int k : {1, 2, 3, 4}) {
        const auto& ctx = RingContext::get(k);
        for (int t = 0; t < 1000; ++t) {
            RElem a = rnd(k, s), b = rnd(k, s);
            CHECK(ctx.psi(ctx.psi_inv(a)) == a);
            CHECK(ctx.psi_inv(a + b) == ctx.psi_inv(a) + ctx.psi_inv(b));
        }
        // inverse direction on random matrices
        for (int t = 0; t < 200; ++t) {
            MatForm m = MatForm::zero(k);
            for (auto& e : m.e) e = uint32_t(splitmix(s)) & m.umask();
            CHECK(ctx.psi_inv(ctx.psi(m)) == m);
        }
    }
}

TEST_CASE("ring multiplication") {
    SUBCASE("nilpotency") {
        const auto& c2 = RingContext::get(2);
        RElem u = RElem::monomial(2, 1, 0, F16::one());
        CHECK(c2.mul(u, u) == RElem::zero(2));
        const auto& c1 = RingContext::get(1);
        RElem v = RElem::monomial(1, 0, 1, F16::one());
        RElem v3 = RElem::monomial(1, 0, 3, F16::one());
        CHECK(c1.mul(v, v3) == RElem::zero(1));
    }
    SUBCASE("v and omega do not commute; the twist spreads across grades") {
        const auto& ctx = RingContext::get(1);
        RElem v = RElem::monomial(1, 0, 1, F16::one());
        RElem w = RElem::monomial(1, 0, 0, F16::w_pow(1));
        RElem vw = ctx.mul(v, w);
        RElem wv = ctx.mul(w, v);
        CHECK(vw != wv);
        // w * v is the canonical left-scalar monomial
        auto mu = ctx.left_coords(wv);
        CHECK(mu[1] == F16::w_pow(1));
        // v * w carries the twist: left coordinates w^s at v plus a constant
        int s = ctx.twist_exponent();
        auto nu = ctx.left_coords(vw);
        CHECK(nu[1] == F16::w_pow(s));
    }
    SUBCASE("associativity and distributivity on random triples") {
        uint64_t s = 5;
        for (int k : {1, 2, 3}) {
            const auto& ctx = RingContext::get(k);
            for (int t = 0; t < 200; ++t) {
                RElem a = rnd(k, s), b = rnd(k, s), c = rnd(k, s);
                CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
                CHECK(ctx.mul(a, b + c) == ctx.mul(a, b) + ctx.mul(a, c));
                CHECK(ctx.mul(a + b, c) == ctx.mul(a, c) + ctx.mul(b, c));
            }
        }
    }
    SUBCASE("mismatched k rejected") {
        const auto& ctx = RingContext::get(2);
        CHECK_THROWS(ctx.mul(RElem::one(2), RElem::one(1)));
    }
}

TEST_CASE("theta") {
    CHECK(theta(RElem::one(1)) == std::vector<F16>{F16::zero(), F16::zero(), F16::zero(), F16::one()});
    CHECK(theta(RElem::monomial(1, 0, 3, F16::one())) ==
          std::vector<F16>{F16::one(), F16::one(), F16::one(), F16::one()});
    auto img = theta(RElem::monomial(2, 1, 0, F16::one()));
    std::vector<F16> want(8, F16::zero());
    want[3] = F16::one();
    want[7] = F16::one();
    CHECK(img == want);

    SUBCASE("bijective with back-substitution") {
        uint64_t s = 23;
        for (int k : {1, 2, 3}) {
            for (int t = 0; t < 500; ++t) {
                RElem r = rnd(k, s);
                CHECK(theta_inv(k, theta(r)) == r);
            }
        }
    }
    SUBCASE("right F16-linear") {
        uint64_t s = 29;
        for (int k : {1, 2}) {
            const auto& ctx = RingContext::get(k);
            for (int t = 0; t < 300; ++t) {
                RElem r = rnd(k, s);
                F16 lam = F16(unsigned(splitmix(s) & 0xF));
                auto lhs = theta(ctx.mul(r, RElem::monomial(k, 0, 0, lam)));
                auto rhs = theta(r);
                for (auto& x : rhs) x *= lam;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("lee weight") {
    CHECK(lee_weight(RElem::zero(1)) == 0);
    CHECK(lee_weight(RElem::monomial(1, 0, 3, F16::one())) == 4);
    CHECK(lee_weight(RElem::monomial(2, 1, 0, F16::one())) == 2);
    SUBCASE("isometry on random pairs") {
        uint64_t s = 31;
        for (int t = 0; t < 3000; ++t) {
            int k = 1 + int(splitmix(s) % 3);
            RElem a = rnd(k, s), b = rnd(k, s);
            auto ia = theta(a), ib = theta(b);
            int dist = 0;
            for (size_t i = 0; i < ia.size(); ++i)
                if (ia[i] != ib[i]) ++dist;
            CHECK(lee_weight(a + b) == dist);
        }
    }
}

TEST_CASE("bachoc map and weight") {
    const auto& c1 = RingContext::get(1);
    SUBCASE("k=1 is psi_inv itself") {
        uint64_t s = 37;
        for (int t = 0; t < 100; ++t) {
            RElem r = rnd(1, s);
            auto phi = bachoc_phi(c1, r);
            REQUIRE(phi.size() == 1);
            CHECK(phi[0] == c1.psi_inv(r).layer(0));
        }
    }
    SUBCASE("k=2 u maps to (I, I)") {
        const auto& c2 = RingContext::get(2);
        auto phi = bachoc_phi(c2, RElem::monomial(2, 1, 0, F16::one()));
        REQUIRE(phi.size() == 2);
        CHECK(phi[0] == kMat4Identity);
        CHECK(phi[1] == kMat4Identity);
    }
    SUBCASE("weights") {
        CHECK(bachoc_weight(c1, RElem::zero(1)) == 0);
        CHECK(bachoc_weight(c1, RElem::one(1)) == 1); // identity layer is invertible
        const auto& c2 = RingContext::get(2);
        CHECK(bachoc_weight(c2, RElem::monomial(2, 1, 0, F16::one())) == 2);
        // nonzero singular base matrices weigh 2 under the default table
        CHECK(default_bachoc_base(0) == 0);
        CHECK(default_bachoc_base(kMat4Identity) == 1);
        Mat4 rank1 = Mat4(1); // single entry
        CHECK(default_bachoc_base(rank1) == 2);
    }
    SUBCASE("phi is F2-linear and bijective") {
        for (int k : {1, 2, 3}) {
            const auto& ctx = RingContext::get(k);
            int dim = 16 * k;
            BitMat m(dim, dim);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l) {
                        int col = (i * 4 + j) * 4 + l;
                        auto img = bachoc_phi(ctx, RElem::monomial(k, i, j, F16::w_pow(l)));
                        for (int layer = 0; layer < k; ++layer)
                            for (int bit = 0; bit < 16; ++bit)
                                if ((img[size_t(layer)] >> bit) & 1) m.set(layer * 16 + bit, col, true);
                    }
            CHECK(m.rank() == dim);
        }
    }
}

TEST_CASE("conjugation modes") {
    const auto& ctx = RingContext::get(1);
    RElem one = RElem::one(1);
    CHECK(ctx.conj(one, ConjMode::RingPower) == one);
    CHECK(ctx.conj(one, ConjMode::CoeffWise) == one);
    RElem v = RElem::monomial(1, 0, 1, F16::one());
    CHECK(ctx.conj(v, ConjMode::RingPower) == RElem::zero(1)); // v^4 = 0
    CHECK(ctx.conj(v, ConjMode::CoeffWise) == v);
    RElem w = RElem::monomial(1, 0, 0, F16::w_pow(1));
    RElem w4 = RElem::monomial(1, 0, 0, F16::w_pow(4));
    CHECK(ctx.conj(w, ConjMode::RingPower) == w4);
    CHECK(ctx.conj(w, ConjMode::CoeffWise) == w4);
    // coefficient-wise mode is an involution
    uint64_t s = 41;
    for (int t = 0; t < 100; ++t) {
        RElem r = rnd(1, s);
        CHECK(ctx.conj(ctx.conj(r, ConjMode::CoeffWise), ConjMode::CoeffWise) == r);
    }
}

TEST_CASE("printing") {
    const auto& ctx = RingContext::get(1);
    CHECK(relem_str(ctx, RElem::zero(1)) == "0");
    CHECK(relem_str(ctx, RElem::one(1)) == "1");
    CHECK(relem_str(ctx, RElem::monomial(1, 0, 3, F16::w_pow(3))) == "w^3*v^3");
    const auto& c2 = RingContext::get(2);
    CHECK(relem_str(c2, RElem::monomial(2, 1, 2, F16::one())) == "u*v^2");
    RPoly p = RPoly::zero(3, 1);
    p.c[2] = RElem::monomial(1, 0, 1, F16::w_pow(5));
    p.c[0] = RElem::one(1);
    CHECK(rp_str(ctx, p) == "w^5*v*x^2 + 1");
}
