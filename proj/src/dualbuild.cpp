#include "cymat/dualbuild.hpp"

#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cymat {

const char* dual_flavor_name(DualFlavor f) {
    return f == DualFlavor::Euclidean ? "euclidean" : "hermitian";
}

namespace {

// One dual generator: x-free prefix u^ue v^ve times the reciprocal hat.
RPoly prefixed(const RingContext& ctx, int n, int k, int ue, int ve, const F16Poly& hat_star) {
    RPoly lift = rp_lift(hat_star, n, k);
    RPoly mono = RPoly::zero(n, k);
    mono.c[0] = RElem::monomial(k, ue, ve, F16::one());
    return rp_mul(ctx, mono, lift);
}

GeneratorSet dual_generators(const FactorSet& factors, const ConstructionProfile& p,
                             bool hermitian) {
    p.validate(factors);
    const int n = p.n, k = p.k;
    const auto& ctx = RingContext::get(k);
    GeneratorSet out;
    out.n = n;
    out.k = k;

    auto hat_star = [&](int cls) -> F16Poly {
        F16Poly prod = p.class_product(factors, cls);
        F16Poly h = hat(prod, n); // x^n - 1 for an empty class: reduces to zero below
        if (hermitian) h = poly_conj(h);
        return reciprocal(h);
    };
    auto emit = [&](int cls, int ue, int ve) {
        if (ue >= k || ve >= 4) return;
        // an empty class has hat x^n - 1, which lifts to zero and is dropped
        RPoly g = prefixed(ctx, n, k, ue, ve, hat_star(cls));
        if (!g.is_zero()) out.gens.push_back(std::move(g));
    };

    emit(0, 0, 0); // <P̂_0^*>, the free part over the unassigned factors
    for (int i = 2; i <= k; ++i)
        if (p.class_degree(factors, i) > 0) emit(i, k - (i - 1), 0);
    for (int i = 1; i <= k; ++i) {
        if (p.class_degree(factors, k + i) > 0) {
            emit(k + i, 0, 3);
            emit(k + i, k - (i - 1), 0);
        }
        if (p.class_degree(factors, 2 * k + i) > 0) {
            emit(2 * k + i, 0, 2);
            emit(2 * k + i, k - (i - 1), 0);
        }
        if (p.class_degree(factors, 3 * k + i) > 0) {
            emit(3 * k + i, 0, 1);
            emit(3 * k + i, k - (i - 1), 0);
        }
    }
    for (int i = 1; i <= k - 1; ++i)
        if (p.class_degree(factors, 4 * k + i) > 0) emit(4 * k + i, k - i, 3);
    if (p.class_degree(factors, 5 * k) > 0) emit(5 * k, k - 1, 3);
    if (p.class_degree(factors, 5 * k + 1) > 0) {
        emit(5 * k + 1, 0, 3);
        emit(5 * k + 1, k - 1, 0);
    }
    if (p.class_degree(factors, 5 * k + 2) > 0) {
        emit(5 * k + 2, 0, 2);
        emit(5 * k + 2, k - 1, 0);
    }
    if (p.class_degree(factors, 5 * k + 3) > 0) {
        emit(5 * k + 3, 0, 1);
        emit(5 * k + 3, k - 1, 0);
    }
    return out;
}

} // namespace

GeneratorSet euclidean_dual_generators(const FactorSet& factors, const ConstructionProfile& p) {
    return dual_generators(factors, p, false);
}

GeneratorSet hermitian_dual_generators(const FactorSet& factors, const ConstructionProfile& p) {
    return dual_generators(factors, p, true);
}

OrthogonalityReport verify_orthogonality(const GeneratorSet& c, const GeneratorSet& d,
                                         DualFlavor flavor, ConjMode mode) {
    if (c.n != d.n || c.k != d.k)
        throw std::invalid_argument("verify_orthogonality: mismatched n or k");
    const int n = c.n, k = c.k;
    const auto& ctx = RingContext::get(k);
    OrthogonalityReport rep;
    rep.flavor = flavor;
    rep.conj_mode = mode;

    // F2-spanning families; the left side carries omega so that every F16
    // right-combination of the right side is covered by bilinearity over F2.
    struct Span {
        RPoly word;
        int gen, t, i, j, l;
    };
    std::vector<Span> left, right;
    for (size_t gi = 0; gi < c.gens.size(); ++gi)
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l)
                        left.push_back({rp_mul_monomial(ctx, c.gens[gi], t, i, j, l),
                                        int(gi), t, i, j, l});
    for (size_t gi = 0; gi < d.gens.size(); ++gi)
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < 4; ++j)
                    right.push_back({rp_mul_monomial(ctx, d.gens[gi], t, i, j), int(gi), t, i, j, 0});

    std::vector<RPoly> right_conj;
    if (flavor == DualFlavor::Hermitian) {
        right_conj.reserve(right.size());
        for (const auto& s : right) {
            RPoly q = s.word;
            for (auto& coeff : q.c) coeff = ctx.conj(coeff, mode);
            right_conj.push_back(std::move(q));
        }
    }

    const long long total = (long long)left.size() * (long long)right.size();
    const long long none = total; // sentinel above every real index
    rep.pairs_checked = total;
    long long first_bad = none;

#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_bad) if (total > 4096)
    for (long long idx = 0; idx < total; ++idx) {
        long long a = idx / (long long)right.size();
        long long b = idx % (long long)right.size();
        const RPoly& ca = left[size_t(a)].word;
        const RPoly& cb = (flavor == DualFlavor::Hermitian) ? right_conj[size_t(b)]
                                                            : right[size_t(b)].word;
        RElem acc = RElem::zero(k);
        for (int t = 0; t < n; ++t) acc = acc + ctx.mul(ca.c[size_t(t)], cb.c[size_t(t)]);
        if (!acc.is_zero() && idx < first_bad) first_bad = idx;
    }

    if (first_bad != none) {
        rep.orthogonal = false;
        const auto& a = left[size_t(first_bad / (long long)right.size())];
        const auto& b = right[size_t(first_bad % (long long)right.size())];
        std::ostringstream os;
        os << "gen " << a.gen << " * x^" << a.t << " u^" << a.i << " v^" << a.j << " w^" << a.l
           << "  vs  dual gen " << b.gen << " * x^" << b.t << " u^" << b.i << " v^" << b.j;
        rep.violation = os.str();
    }
    return rep;
}

DualReport dual_cardinality_check(const FactorSet& factors, const ConstructionProfile& p,
                                  DualFlavor flavor, ConjMode mode) {
    DualReport rep;
    auto card = cardinality_xi(factors, p);
    rep.xi = card.xi;
    rep.eta = card.eta;
    auto primal = assemble_generators(factors, p);
    auto dual = (flavor == DualFlavor::Euclidean) ? euclidean_dual_generators(factors, p)
                                                  : hermitian_dual_generators(factors, p);
    auto cimg = gray_span(primal);
    auto dimg = gray_span(dual);
    rep.primal_dim = cimg.dim();
    rep.dual_dim = dimg.dim();
    rep.dims_complementary = (rep.primal_dim + rep.dual_dim == 4 * p.k * p.n);
    rep.dual_dim_matches_eta = (rep.dual_dim == rep.eta);
    rep.image_orthogonal = true;
    for (const auto& a : cimg.basis) {
        for (const auto& b : dimg.basis) {
            F16 acc = F16::zero();
            for (size_t t = 0; t < a.size(); ++t) acc += a[t] * b[t];
            if (!acc.is_zero()) {
                rep.image_orthogonal = false;
                break;
            }
        }
        if (!rep.image_orthogonal) break;
    }
    rep.ortho = verify_orthogonality(primal, dual, flavor, mode);
    return rep;
}

CardinalitySummary dual_to_rprime_form(const FactorSet& factors, const ConstructionProfile& p,
                                       DualFlavor flavor) {
    CardinalitySummary s = cardinality_xi(factors, p);
    auto dual = (flavor == DualFlavor::Euclidean) ? euclidean_dual_generators(factors, p)
                                                  : hermitian_dual_generators(factors, p);
    auto slot_deg = rprime_slot_degrees(dual);
    s.degA.assign(size_t(5 * p.k + 3), p.n);
    for (int sl = 0; sl < 4 * p.k; ++sl) s.degA[size_t(sl)] = slot_deg[size_t(sl)];
    if (s.rprime_exponent() != s.eta)
        throw std::logic_error("dual R'-form count 16^" + std::to_string(s.rprime_exponent()) +
                               " does not match 16^eta with eta = " + std::to_string(s.eta));
    return s;
}

} // namespace cymat
