#pragma once

#include <map>
#include <string>

#include "cymat/codebuild.hpp"

namespace cymat {

enum class DistanceCertificate {
    Exhaustive,         // every nonzero codeword enumerated
    ColumnIndependence, // all (d-1)-subsets of parity-check columns independent
    Open                // bounds did not meet within the work limits
};
const char* certificate_name(DistanceCertificate c);

struct DistanceResult {
    int d = -1;             // -1 encodes the infinite distance of the zero code
    std::vector<F16> witness;
    DistanceCertificate certificate = DistanceCertificate::Open;
    int lower_bound = 0;    // d >= lower_bound is proven
    int upper_bound = -1;   // weight of the best codeword found (-1: none)
    long long words_enumerated = 0;
    long long subsets_checked = 0;
    long long combos_searched = 0;

    bool exact() const { return certificate != DistanceCertificate::Open; }
};

struct DistanceLimits {
    long long max_words = 1LL << 24;      // exhaustive enumeration cap (16^dim)
    long long max_subsets = 60'000'000;   // column-subset rank checks cap
    int probe_rounds = 32;                // randomized information-set probes
    uint64_t seed = 0x5eed;
};

/// Exact minimum distance by enumerating all 16^dim - 1 nonzero codewords.
/// Refuses codes beyond limits.max_words.  The parallel kernel shards the
/// leading message digit; both kernels return bit-identical results.
DistanceResult min_distance_exhaustive(const LinearCodeF16& code,
                                       const DistanceLimits& limits = {});
DistanceResult min_distance_exhaustive_serial(const LinearCodeF16& code,
                                              const DistanceLimits& limits = {});

/// Witness-plus-certificate method: an upper bound from sparse row
/// combinations (up to 3 rows) and seeded information-set probes, and a lower
/// bound from verifying that every set of <= d-1 parity-check columns is
/// linearly independent.  Returns exact d when the bounds meet, otherwise an
/// Open result carrying both bounds.
DistanceResult min_distance_certified(const LinearCodeF16& code, int d_hint = 0,
                                      const DistanceLimits& limits = {});
DistanceResult min_distance_certified_serial(const LinearCodeF16& code, int d_hint = 0,
                                             const DistanceLimits& limits = {});

/// (length - dim + 1) - d, the distance to the Singleton bound.
int mds_gap(int length, int dim, int d);

/// Lee-weight histogram of an enumerable code over R^n, computed by pulling
/// Gray-image codewords back through theta coordinate-wise.  Also returns the
/// minimum Hamming weight of the image for the isometry cross-check.
struct LeeProfile {
    std::map<int, long long> histogram;
    int min_lee = -1;       // over nonzero codewords; -1 for the zero code
    int min_hamming = -1;   // of the Gray image, computed on the image route
};
LeeProfile lee_profile(const GeneratorSet& gens, long long max_words = 1LL << 24);

std::string distance_json(const DistanceResult& r);

} // namespace cymat
