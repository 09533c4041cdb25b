// Compares the serial reference kernels against the OpenMP ones on the
// distance-certification workloads: column-subset rank scans and exhaustive
// codeword enumeration.

#include <chrono>
#include <cstdio>

#include "cymat/catalog.hpp"
#include "cymat/genexpr.hpp"
#include "cymat/metrics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cymat;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LinearCodeF16 build_row(const CatalogRow& row) {
    auto fs = factor_xn_minus_1(row.n);
    GeneratorSet gens;
    gens.n = row.n;
    gens.k = row.k;
    for (const auto& g : row.generators) gens.gens.push_back(parse_genexpr(g, fs, row.k));
    return gray_span(gens);
}

} // namespace

int main() {
#ifdef _OPENMP
    printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    printf("OpenMP disabled; both columns run the serial kernel\n");
#endif
    printf("%-28s %10s %10s %8s\n", "workload", "serial(s)", "parallel(s)", "speedup");

    auto catalog = load_catalog();
    for (const auto& row : catalog) {
        if (!(row.example == 2 || (row.example == 3 && row.row <= 2))) continue;
        auto code = build_row(row);
        auto t0 = std::chrono::steady_clock::now();
        auto rs = min_distance_certified_serial(code, row.exp_d);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto rp = min_distance_certified(code, row.exp_d);
        double tp = seconds_since(t0);
        if (rs.d != rp.d) {
            printf("kernel disagreement on example %d row %d: %d vs %d\n", row.example, row.row,
                   rs.d, rp.d);
            return 1;
        }
        char name[64];
        snprintf(name, sizeof name, "certify ex%d.%d [%d,%d,%d]", row.example, row.row,
                 code.length, code.dim(), rs.d);
        printf("%-28s %10.3f %10.3f %7.2fx\n", name, ts, tp, ts / tp);
    }

    // exhaustive enumeration on a small dense code
    {
        auto fs = factor_xn_minus_1(3);
        GeneratorSet gens;
        gens.n = 3;
        gens.k = 1;
        gens.gens.push_back(parse_genexpr("(w v^3 + w^2 v^2 + w^5) f_2", fs, 1));
        gens.gens.push_back(parse_genexpr("v f_1", fs, 1));
        auto code = gray_span(gens);
        DistanceLimits lim;
        lim.max_words = 1LL << 30;
        auto t0 = std::chrono::steady_clock::now();
        auto rs = min_distance_exhaustive_serial(code, lim);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto rp = min_distance_exhaustive(code, lim);
        double tp = seconds_since(t0);
        if (rs.d != rp.d || rs.witness != rp.witness) {
            printf("exhaustive kernel disagreement\n");
            return 1;
        }
        char name[64];
        snprintf(name, sizeof name, "exhaustive [%d,%d,%d]", code.length, code.dim(), rs.d);
        printf("%-28s %10.3f %10.3f %7.2fx\n", name, ts, tp, ts / tp);
    }
    return 0;
}
