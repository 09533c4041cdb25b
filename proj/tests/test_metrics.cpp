#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cymat/genexpr.hpp"
#include "cymat/metrics.hpp"

using namespace cymat;

namespace {

LinearCodeF16 code_from(int n, int k, std::vector<std::string> exprs) {
    auto fs = factor_xn_minus_1(n);
    GeneratorSet gens;
    gens.n = n;
    gens.k = k;
    for (auto& e : exprs) gens.gens.push_back(parse_genexpr(e, fs, k));
    return gray_span(gens);
}

} // namespace

TEST_CASE("degenerate codes") {
    SUBCASE("zero code distance is the infinite sentinel") {
        GeneratorSet gens;
        gens.n = 3;
        gens.k = 1;
        auto code = gray_span(gens);
        auto r = min_distance_exhaustive(code);
        CHECK(r.d == -1);
        auto c = min_distance_certified(code);
        CHECK(c.d == -1);
    }
    SUBCASE("full space has distance 1") {
        auto code = code_from(3, 1, {"1"});
        CHECK(code.dim() == 12);
        auto r = min_distance_certified(code);
        CHECK(r.d == 1);
        CHECK(r.certificate == DistanceCertificate::ColumnIndependence);
    }
}

TEST_CASE("exhaustive equals certified on small codes") {
    DistanceLimits lim;
    lim.max_words = 1LL << 26;
    struct Fixture {
        int n, k;
        std::vector<std::string> gens;
    };
    std::vector<Fixture> fixtures = {
        {3, 1, {"v^3 f_2 f_3"}},
        {3, 1, {"v^2 f_1"}},
        {3, 1, {"(w v^3 + w) f_2", "v^3 f_1"}},
        {5, 1, {"v^2 f_2 f_3 f_4 f_5"}},
        {3, 2, {"u v^2 f_1", "v^3 f_2"}},
    };
    for (auto& f : fixtures) {
        auto code = code_from(f.n, f.k, f.gens);
        REQUIRE(code.dim() >= 1);
        REQUIRE(code.dim() <= 6);
        auto ex = min_distance_exhaustive(code, lim);
        auto ce = min_distance_certified(code);
        CHECK(ex.d == ce.d);
        CHECK(hamming_weight(ce.witness) == ce.d);
        CHECK(in_rowspace16(code.basis, ce.witness));
    }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
    auto code = code_from(5, 1, {"(w v^3+w^2v^2+w^5)f_2", "(w^2 v^2+w v+w^5)f_1f_3f_4f_5"});
    auto s = min_distance_certified_serial(code);
    auto p = min_distance_certified(code);
    CHECK(s.d == p.d);
    CHECK(s.witness == p.witness);
    CHECK(s.certificate == p.certificate);

    auto small = code_from(3, 1, {"v^2 f_1", "v^3 f_2 f_3"});
    REQUIRE(small.dim() <= 6);
    auto es = min_distance_exhaustive_serial(small);
    auto ep = min_distance_exhaustive(small);
    CHECK(es.d == ep.d);
    CHECK(es.witness == ep.witness);
    CHECK(es.words_enumerated == ep.words_enumerated);
}

TEST_CASE("certified distance carries a sound certificate") {
    auto code = code_from(5, 1, {"(w^3v^3 + w^5v^2 + w^4v + w^13 + w)f_2 + wf_1"});
    auto r = min_distance_certified(code);
    REQUIRE(r.exact());
    REQUIRE(r.d >= 1);
    CHECK(hamming_weight(r.witness) == r.d);
    CHECK(in_rowspace16(code.basis, r.witness));

    SUBCASE("negative control: no codeword of weight d-1 exists") {
        // a weight-(d-1) vector built from the witness must fall outside the code
        if (r.d >= 2) {
            auto v = r.witness;
            for (auto& a : v) {
                if (!a.is_zero()) {
                    a = F16::zero();
                    break;
                }
            }
            CHECK(hamming_weight(v) == r.d - 1);
            CHECK(!in_rowspace16(code.basis, v));
        }
    }
}

TEST_CASE("work limits produce OPEN results with bounds") {
    auto code = code_from(5, 1, {"(w v^3+w^2v^2+w^5)f_2", "(w^2 v^2+w v+w^5)f_1f_3f_4f_5"});
    DistanceLimits lim;
    lim.max_subsets = 1; // nothing fits
    auto r = min_distance_certified(code, 0, lim);
    CHECK(r.certificate == DistanceCertificate::Open);
    CHECK(r.lower_bound >= 1);
    CHECK(r.upper_bound >= r.lower_bound);
    auto full = min_distance_certified(code);
    CHECK(full.exact());
    CHECK(full.d >= r.lower_bound);
    CHECK(full.d <= r.upper_bound);
}

TEST_CASE("exhaustive refuses oversized codes") {
    auto code = code_from(5, 1, {"1"});
    DistanceLimits lim;
    lim.max_words = 1000;
    CHECK_THROWS(min_distance_exhaustive(code, lim));
}

TEST_CASE("mds gap") {
    CHECK(mds_gap(20, 14, 5) == 2);
    CHECK(mds_gap(20, 19, 2) == 0);
    CHECK(mds_gap(7, 7, 1) == 0);
    // Singleton bound on every distance we certify
    auto code = code_from(3, 1, {"(w v^3+w^2v^2 + w^5)f_2", "(w^3v^3+w)f_1f_3"});
    auto r = min_distance_certified(code);
    CHECK(mds_gap(code.length, code.dim(), r.d) >= 0);
}

TEST_CASE("lee profile") {
    SUBCASE("zero code") {
        GeneratorSet gens;
        gens.n = 3;
        gens.k = 1;
        auto prof = lee_profile(gens);
        CHECK(prof.histogram.at(0) == 1);
        CHECK(prof.histogram.size() == 1);
        CHECK(prof.min_lee == -1);
    }
    SUBCASE("full ring at n=1: the theta-image weight census of all 2^16 elements") {
        GeneratorSet gens;
        gens.n = 1;
        gens.k = 1;
        gens.gens.push_back(RPoly::one(1, 1));
        auto prof = lee_profile(gens);
        long long total = 0;
        for (auto& [w, c] : prof.histogram) total += c;
        CHECK(total == 65536);
        for (int w = 0; w <= 4; ++w) CHECK(prof.histogram.count(w) == 1);
        // binomial census of F16^4 by weight
        CHECK(prof.histogram.at(0) == 1);
        CHECK(prof.histogram.at(1) == 4 * 15);
        CHECK(prof.histogram.at(4) == 15LL * 15 * 15 * 15);
        CHECK(prof.min_lee == 1);
        CHECK(prof.min_lee == prof.min_hamming);
    }
    SUBCASE("min Lee equals min Hamming of the image") {
        auto fs = factor_xn_minus_1(3);
        GeneratorSet gens;
        gens.n = 3;
        gens.k = 1;
        gens.gens.push_back(parse_genexpr("v^3 f_1", fs, 1));
        auto prof = lee_profile(gens);
        CHECK(prof.min_lee == prof.min_hamming);
        auto code = gray_span(gens);
        auto d = min_distance_exhaustive(code);
        CHECK(prof.min_hamming == d.d);
    }
}
