#pragma once

#include <map>
#include <string>
#include <vector>

#include "cymat/linalg16.hpp"
#include "cymat/poly.hpp"
#include "cymat/rring.hpp"

namespace cymat {

/// Assignment of the irreducible factors of x^n - 1 to the 5k+4 construction
/// classes (class 0 = unused), with the unit data for the mixed classes.
/// Unit defaults are 1; alpha(1,1) = 0 and alpha(1,2) = 1 are fixed.
struct ConstructionProfile {
    int n = 1;
    int k = 1;
    std::vector<int> class_of;                    // per factor, 0-based, values 0..5k+3
    std::map<std::pair<int, int>, F16Poly> alphas; // key (row 1..4, col 1..k)
    std::map<std::pair<int, int>, F16Poly> betas;  // key (m 1..3, i 1..k-1)

    F16Poly alpha(int row, int col) const;
    F16Poly beta(int m, int i) const;

    /// Throws with an explanation on any malformed assignment: out-of-range
    /// classes, u-headed classes at k = 1, or non-unit alpha/beta data.
    void validate(const FactorSet& factors) const;

    /// Product of the factors assigned to a class (1 when the class is empty).
    F16Poly class_product(const FactorSet& factors, int cls) const;
    int class_degree(const FactorSet& factors, int cls) const;
};

ConstructionProfile profile_from_json(const std::string& json_text);
std::string profile_to_json(const ConstructionProfile& p);

struct GeneratorSet {
    int n = 1;
    int k = 1;
    std::vector<RPoly> gens;
};

/// Gray-image code: row-reduced generator matrix over GF(16) of length 4kn.
struct LinearCodeF16 {
    int length = 0;
    int n = 1;
    int k = 1;
    F16Mat basis; // RREF rows, linearly independent
    std::string provenance;

    int dim() const { return int(basis.size()); }
};

struct CardinalitySummary {
    long long xi = 0;
    long long eta = 0;
    std::vector<int> degA;             // 5k+3 entries when computed
    long long rprime_exponent() const; // (5k+3)n - sum(degA)
    int n = 0, k = 0;
};

/// One generator per populated class, exactly in the displayed direct-sum
/// shape: u^{i-1} P̂_i, u^{i-1}v P̂_{k+i}, ..., (u^i + v b1 + v^2 b2 + v^3 b3) P̂_{4k+i},
/// and the four alpha-laden generators.
GeneratorSet assemble_generators(const FactorSet& factors, const ConstructionProfile& p);

/// Right R_n-span of the generators, Gray-mapped: rows theta(g * x^t u^i v^j)
/// reduced over GF(16).  Empty generator sets give the zero code.
LinearCodeF16 gray_span(const GeneratorSet& gens);

std::vector<F16> gray_codeword(const RPoly& p);

/// The closed-form exponents: |C| = 16^xi, |dual| = 16^eta, xi + eta = 4kn.
CardinalitySummary cardinality_xi(const FactorSet& factors, const ConstructionProfile& p);

/// Per-slot principal-ideal form over R' = F16[x]/<x^n - 1>: computes the
/// generator degrees deg A_j and checks 16^{(5k+3)n - sum deg A_j} == 16^xi.
CardinalitySummary to_rprime_form(const FactorSet& factors, const ConstructionProfile& p);

/// Leading-ideal degrees of a generator set over the 4k monomial slots u^i v^j
/// (v-major order); each slot ideal is verified principal with a generator
/// dividing x^n - 1.  Sum of (n - deg) over slots equals the code dimension.
std::vector<int> rprime_slot_degrees(const GeneratorSet& gens);

/// The xi contribution 16^{coeff * deg} of a single class, as a rank.
long long xi_term_of_class(const FactorSet& factors, const ConstructionProfile& p, int cls);

/// True when every populated class summand has exactly its nominal rank (the
/// unit data realizes the claimed direct-sum cardinalities; the closed-form
/// cardinality statements presuppose such units exist, and degenerate choices
/// do occur, e.g. all-ones betas).
bool profile_is_normal(const FactorSet& factors, const ConstructionProfile& p);

/// Random profile over the classes valid for k; with normalize set, unit data
/// (and if necessary the class assignment) is resampled until the profile is
/// normal.  Deterministic in the seed.
ConstructionProfile random_profile(const FactorSet& factors, int k, uint64_t seed,
                                   bool normalize = true);

struct CrtReport {
    int n = 1;
    std::vector<F16Poly> idempotents;
    bool sum_is_one = false;
    bool pairwise_orthogonal = false;
    bool ok() const { return sum_is_one && pairwise_orthogonal; }
};

/// CRT idempotents e_r = P̂_r * (P̂_r^{-1} mod f_r) of F16[x]/<x^n - 1>,
/// verified to sum to 1 and be pairwise orthogonal.
CrtReport crt_decompose(int n);

struct ClassifyReport {
    int k = 1;
    int trials = 0;
    int matched = 0;
    std::vector<std::string> unmatched; // printable descriptions of failures
    bool ok() const { return matched == trials; }
};

/// Samples cyclic right submodules <g> = g*R of R and matches each one's
/// dimension signature (F2-dims of g*R*mu over the monomial mu grid) against
/// the signatures generated by the classified submodule forms.
ClassifyReport submodule_sample_classify(int k, int trials, uint64_t seed = 0x5eed);

} // namespace cymat
