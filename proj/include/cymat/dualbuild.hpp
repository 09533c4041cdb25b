#pragma once

#include <string>
#include <vector>

#include "cymat/codebuild.hpp"

namespace cymat {

enum class DualFlavor { Euclidean, Hermitian };
const char* dual_flavor_name(DualFlavor f);

/// Dual generator list: reciprocals of the class hats with the displayed
/// u/v-prefixes; classes whose displayed sum has a "+" emit both generators.
GeneratorSet euclidean_dual_generators(const FactorSet& factors, const ConstructionProfile& p);

/// As Euclidean with every hat replaced by its conjugate-reciprocal.
GeneratorSet hermitian_dual_generators(const FactorSet& factors, const ConstructionProfile& p);

struct OrthogonalityReport {
    bool orthogonal = true;
    long long pairs_checked = 0;
    std::string violation; // first violating pair, printable
    DualFlavor flavor = DualFlavor::Euclidean;
    ConjMode conj_mode = ConjMode::CoeffWise;
};

/// Checks sum_t a_t * b_t = 0 (or a_t * conj(b_t) for Hermitian) over the
/// F2-spanning families of both sides: the left family carries the extra
/// omega^l monomials so that bilinearity over the central subfield F2 covers
/// every codeword pair.
OrthogonalityReport verify_orthogonality(const GeneratorSet& c, const GeneratorSet& d,
                                         DualFlavor flavor,
                                         ConjMode mode = ConjMode::CoeffWise);

struct DualReport {
    long long xi = 0;
    long long eta = 0;
    int primal_dim = 0;
    int dual_dim = 0;
    bool dims_complementary = false; // primal + dual == 4kn
    bool dual_dim_matches_eta = false;
    bool image_orthogonal = false;   // standard F16 pairing of the Gray images
    OrthogonalityReport ortho;       // ring-valued pairing (reported, may fail)
};

DualReport dual_cardinality_check(const FactorSet& factors, const ConstructionProfile& p,
                                  DualFlavor flavor = DualFlavor::Euclidean,
                                  ConjMode mode = ConjMode::CoeffWise);

/// R'-form of the dual generator set; asserts the slot count equals 16^eta.
CardinalitySummary dual_to_rprime_form(const FactorSet& factors, const ConstructionProfile& p,
                                       DualFlavor flavor);

} // namespace cymat
