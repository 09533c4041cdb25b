#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cymat/metrics.hpp"

namespace cymat {

/// One row of the bundled construction tables: generator expressions with the
/// externally reported parameters to compare against.  The expected values
/// live only here, never inside the builders.
struct CatalogRow {
    int example = 0;
    int row = 0;
    int n = 0;
    int k = 0;
    std::vector<std::string> generators;
    int exp_length = 0;
    int exp_dim = 0;
    int exp_d = 0;
    int exp_dmds = 0;        // 0 when the source table has no d_MDS column
    std::string reference;   // comparison code from earlier literature, if any
};

/// Loads the embedded table (or a caller-supplied JSON override of the same
/// schema: [{"example":1,"row":1,"n":5,"k":1,"gens":[...],"params":[20,14,5],
/// "dmds":7,"ref":""}, ...]).
std::vector<CatalogRow> load_catalog(const std::string& json_override = "");

struct ReproduceRow {
    CatalogRow row;
    int got_length = 0;
    int got_dim = 0;
    DistanceResult dist;
    int got_dmds = 0;
    bool match = false;          // [length, dim, d] equals the table entry
    bool certified = false;      // distance carries an exact certificate
    double seconds = 0;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;
    bool all_match = false;
    bool all_certified = false; // every mismatch still carries a certificate
};

/// Builds every requested row, certifies its distance, and compares against
/// the embedded expected values.  Mismatches are data, not errors.
ReproduceReport run_reproduce(int example /* 1..4, or 0 = all */,
                              const std::string& catalog_override = "");

std::string reproduce_json(const ReproduceReport& rep);

} // namespace cymat
