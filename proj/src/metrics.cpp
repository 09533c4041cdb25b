#include "cymat/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cymat {

const char* certificate_name(DistanceCertificate c) {
    switch (c) {
        case DistanceCertificate::Exhaustive: return "exhaustive";
        case DistanceCertificate::ColumnIndependence: return "column-independence";
        default: return "open";
    }
}

int mds_gap(int length, int dim, int d) { return (length - dim + 1) - d; }

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long long pow16(int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 16;
    return r;
}

// Enumerates the codewords whose message vector has the given leading digit,
// odometer-style over the remaining digits.  Returns (weight, message index)
// of the minimum, scanning messages in lexicographic order.
struct ShardResult {
    int weight = INT32_MAX;
    long long msg = -1;
    std::vector<F16> witness;
    long long words = 0;
};

ShardResult enumerate_shard(const F16Mat& basis, int lead_digit) {
    const int dim = int(basis.size());
    const size_t len = basis[0].size();
    ShardResult res;
    std::vector<uint8_t> msg(size_t(dim), 0);
    msg[0] = uint8_t(lead_digit);
    std::vector<F16> word(len, F16::zero());
    if (lead_digit) {
        F16 s = F16(unsigned(lead_digit));
        for (size_t t = 0; t < len; ++t) word[t] = basis[0][t] * s;
    }
    auto consider = [&](long long index) {
        ++res.words;
        int w = hamming_weight(word);
        if (w > 0 && w < res.weight) {
            res.weight = w;
            res.msg = index;
            res.witness = word;
        }
    };
    long long count = pow16(dim - 1);
    long long base = (long long)lead_digit * count;
    consider(base);
    for (long long i = 1; i < count; ++i) {
        // advance the odometer over digits 1..dim-1 (digit dim-1 moves fastest)
        for (int pos = dim - 1; pos >= 1; --pos) {
            uint8_t old = msg[size_t(pos)];
            uint8_t next = uint8_t((old + 1) & 0xF);
            msg[size_t(pos)] = next;
            F16 delta = F16(old) + F16(next);
            for (size_t t = 0; t < len; ++t) word[t] += basis[size_t(pos)][t] * delta;
            if (next != 0) break;
        }
        consider(base + i);
    }
    return res;
}

DistanceResult exhaustive_impl(const LinearCodeF16& code, const DistanceLimits& limits,
                               bool parallel) {
    DistanceResult res;
    const int dim = code.dim();
    if (dim == 0) {
        res.d = -1;
        res.certificate = DistanceCertificate::Exhaustive;
        return res;
    }
    long long words = pow16(dim);
    if (words > limits.max_words)
        throw std::invalid_argument("min_distance_exhaustive: 16^dim exceeds the work limit");

    std::vector<ShardResult> shards(16);
#pragma omp parallel for schedule(dynamic) if (parallel && dim > 3)
    for (int d0 = 0; d0 < 16; ++d0) shards[size_t(d0)] = enumerate_shard(code.basis, d0);

    ShardResult best;
    for (auto& s : shards) {
        res.words_enumerated += s.words;
        if (s.weight < best.weight || (s.weight == best.weight && s.msg < best.msg)) best = s;
    }
    res.d = best.weight;
    res.witness = best.witness;
    res.lower_bound = best.weight;
    res.upper_bound = best.weight;
    res.certificate = DistanceCertificate::Exhaustive;
    return res;
}

// ---------------------------------------------------------------------------
// Certified method

struct UpperBound {
    int weight = INT32_MAX;
    std::vector<F16> witness;
    long long combos = 0;
};

void consider_word(UpperBound& ub, const std::vector<F16>& word) {
    int w = hamming_weight(word);
    if (w > 0 && w < ub.weight) {
        ub.weight = w;
        ub.witness = word;
    }
}

// Sparse combinations of up to three basis rows, leading scalar fixed to 1.
UpperBound sparse_combination_search(const F16Mat& basis, int stop_at, bool parallel) {
    const int dim = int(basis.size());
    const size_t len = basis[0].size();
    UpperBound best;
    for (int i = 0; i < dim; ++i) {
        ++best.combos;
        consider_word(best, basis[size_t(i)]);
    }
    if (best.weight <= stop_at) return best;

    std::vector<UpperBound> locals;
#ifdef _OPENMP
    int nthreads = parallel ? omp_get_max_threads() : 1;
#else
    int nthreads = 1;
    (void)parallel;
#endif
    locals.resize(size_t(std::max(1, nthreads)));

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < dim; ++i) {
#ifdef _OPENMP
        UpperBound& ub = locals[size_t(omp_get_thread_num())];
#else
        UpperBound& ub = locals[0];
#endif
        std::vector<F16> pair_word(len), word(len);
        for (int j = i + 1; j < dim; ++j) {
            for (unsigned sj = 1; sj < 16; ++sj) {
                F16 b = F16(sj);
                for (size_t t = 0; t < len; ++t)
                    pair_word[t] = basis[size_t(i)][t] + basis[size_t(j)][t] * b;
                ++ub.combos;
                consider_word(ub, pair_word);
                for (int l = j + 1; l < dim; ++l) {
                    for (unsigned sl = 1; sl < 16; ++sl) {
                        F16 c = F16(sl);
                        for (size_t t = 0; t < len; ++t)
                            word[t] = pair_word[t] + basis[size_t(l)][t] * c;
                        ++ub.combos;
                        consider_word(ub, word);
                    }
                }
            }
        }
    }
    for (auto& ub : locals) {
        best.combos += ub.combos;
        if (ub.weight < best.weight) {
            best.weight = ub.weight;
            best.witness = ub.witness;
        }
    }
    return best;
}

// Randomized information-set probes: permute columns, reduce, and harvest the
// (generally sparser) rows of the permuted RREF as codewords.
void probe_search(UpperBound& ub, const F16Mat& basis, int rounds, uint64_t seed) {
    if (basis.empty()) return;
    const size_t len = basis[0].size();
    uint64_t s = seed;
    std::vector<int> perm(len);
    for (size_t i = 0; i < len; ++i) perm[i] = int(i);
    for (int round = 0; round < rounds; ++round) {
        for (size_t i = len; i > 1; --i) std::swap(perm[i - 1], perm[splitmix(s) % i]);
        F16Mat m;
        m.reserve(basis.size());
        for (const auto& row : basis) {
            F16Vec r(len);
            for (size_t t = 0; t < len; ++t) r[t] = row[size_t(perm[t])];
            m.push_back(std::move(r));
        }
        rref16(m);
        for (const auto& row : m) {
            F16Vec orig(len);
            for (size_t t = 0; t < len; ++t) orig[size_t(perm[t])] = row[t];
            ++ub.combos;
            consider_word(ub, orig);
        }
    }
}

// All t-subsets of the columns of H independent?  Returns the lexicographically
// first dependent subset through `dep` if any.  Deterministic under OpenMP.
struct SubsetScan {
    bool all_independent = true;
    std::vector<int> dep;       // column indices of the first dependency
    std::vector<F16> dep_coeffs; // nullspace combination on those columns
    long long checked = 0;
};

// rank computation on the submatrix H[:, cols]; returns dependency coefficients
// when the columns are dependent.
bool columns_dependent(const F16Mat& h, const std::vector<int>& cols, std::vector<F16>* coeffs) {
    const int rows = int(h.size());
    const int t = int(cols.size());
    // build t x rows transposed for elimination convenience: we solve for a
    // combination of the chosen columns summing to zero
    F16Mat m(size_t(t), F16Vec(size_t(rows + t), F16::zero()));
    for (int c = 0; c < t; ++c) {
        for (int r = 0; r < rows; ++r) m[size_t(c)][size_t(r)] = h[size_t(r)][size_t(cols[size_t(c)])];
        m[size_t(c)][size_t(rows + c)] = F16::one(); // identity tail records the combination
    }
    // eliminate on the first `rows` coordinates
    int rank = 0;
    for (int col = 0; col < rows && rank < t; ++col) {
        int piv = -1;
        for (int r = rank; r < t; ++r)
            if (!m[size_t(r)][size_t(col)].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[size_t(rank)], m[size_t(piv)]);
        F16 inv = m[size_t(rank)][size_t(col)].inv();
        for (auto& a : m[size_t(rank)]) a *= inv;
        for (int r = 0; r < t; ++r) {
            if (r == rank) continue;
            F16 f = m[size_t(r)][size_t(col)];
            if (f.is_zero()) continue;
            for (size_t cc = 0; cc < m[size_t(r)].size(); ++cc)
                m[size_t(r)][cc] += f * m[size_t(rank)][cc];
        }
        ++rank;
    }
    if (rank == t) return false;
    if (coeffs) {
        // any row beyond the rank has zero head and a valid combination tail
        coeffs->assign(size_t(t), F16::zero());
        for (int c = 0; c < t; ++c) (*coeffs)[size_t(c)] = m[size_t(rank)][size_t(rows + c)];
    }
    return true;
}

SubsetScan scan_subsets(const F16Mat& h, int ncols, int t, long long* budget, bool parallel) {
    SubsetScan out;
    if (t == 0 || t > ncols) return out;

    // enumerate combinations lexicographically; parallelize over the first column
    struct Local {
        bool found = false;
        std::vector<int> dep;
        std::vector<F16> coeffs;
        long long checked = 0;
    };
#ifdef _OPENMP
    int nthreads = parallel ? omp_get_max_threads() : 1;
#else
    int nthreads = 1;
    (void)parallel;
#endif
    std::vector<Local> locals(size_t(std::max(1, nthreads)));

    // Each shard stops at its own first (lexicographically least) dependency;
    // the merge takes the least across shards, so the serial and parallel
    // kernels return identical witnesses.
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int first = 0; first <= ncols - t; ++first) {
#ifdef _OPENMP
        Local& loc = locals[size_t(omp_get_thread_num())];
#else
        Local& loc = locals[0];
#endif
        std::vector<int> cols(size_t(t), 0);
        cols[0] = first;
        for (int i = 1; i < t; ++i) cols[size_t(i)] = first + i;
        while (true) {
            std::vector<F16> coeffs;
            ++loc.checked;
            if (columns_dependent(h, cols, &coeffs)) {
                if (!loc.found || cols < loc.dep) {
                    loc.found = true;
                    loc.dep = cols;
                    loc.coeffs = coeffs;
                }
                break;
            }
            // next combination with fixed first element
            int i = t - 1;
            while (i >= 1 && cols[size_t(i)] == ncols - t + i) --i;
            if (i < 1) break;
            ++cols[size_t(i)];
            for (int j = i + 1; j < t; ++j) cols[size_t(j)] = cols[size_t(j - 1)] + 1;
        }
    }

    for (auto& loc : locals) {
        out.checked += loc.checked;
        if (loc.found && (out.all_independent || loc.dep < out.dep)) {
            out.all_independent = false;
            out.dep = loc.dep;
            out.dep_coeffs = loc.coeffs;
        }
    }
    if (budget) *budget -= out.checked;
    return out;
}

DistanceResult certified_impl(const LinearCodeF16& code, int d_hint, const DistanceLimits& limits,
                              bool parallel) {
    DistanceResult res;
    const int dim = code.dim();
    const int n = code.length;
    if (dim == 0) {
        res.d = -1;
        res.certificate = DistanceCertificate::Exhaustive;
        return res;
    }
    if (dim == n) {
        res.d = 1;
        res.witness.assign(size_t(n), F16::zero());
        res.witness[0] = F16::one();
        res.lower_bound = res.upper_bound = 1;
        res.certificate = DistanceCertificate::ColumnIndependence;
        return res;
    }

    UpperBound ub = sparse_combination_search(code.basis, d_hint > 0 ? d_hint : 1, parallel);
    if (d_hint > 0 && ub.weight > d_hint)
        probe_search(ub, code.basis, limits.probe_rounds, limits.seed);
    res.combos_searched = ub.combos;
    res.upper_bound = ub.weight;

    F16Mat h = nullspace16(code.basis, n);
    long long budget = limits.max_subsets;
    int t = 1;
    for (; t < ub.weight; ++t) {
        // C(n, t) within remaining budget?
        double est = 1;
        for (int i = 0; i < t; ++i) est = est * double(n - i) / double(i + 1);
        if (est > double(budget)) {
            res.lower_bound = t;
            res.certificate = DistanceCertificate::Open;
            res.subsets_checked = limits.max_subsets - budget;
            return res;
        }
        SubsetScan scan = scan_subsets(h, n, t, &budget, parallel);
        if (!scan.all_independent) {
            // dependency of t columns = codeword of weight exactly t
            res.d = t;
            res.witness.assign(size_t(n), F16::zero());
            for (size_t i = 0; i < scan.dep.size(); ++i)
                res.witness[size_t(scan.dep[i])] = scan.dep_coeffs[i];
            res.lower_bound = t;
            res.upper_bound = t;
            res.subsets_checked = limits.max_subsets - budget;
            res.certificate = DistanceCertificate::ColumnIndependence;
            return res;
        }
    }
    res.subsets_checked = limits.max_subsets - budget;
    res.d = ub.weight;
    res.witness = ub.witness;
    res.lower_bound = ub.weight;
    res.certificate = DistanceCertificate::ColumnIndependence;
    return res;
}

} // namespace

DistanceResult min_distance_exhaustive(const LinearCodeF16& code, const DistanceLimits& limits) {
    return exhaustive_impl(code, limits, true);
}

DistanceResult min_distance_exhaustive_serial(const LinearCodeF16& code,
                                              const DistanceLimits& limits) {
    return exhaustive_impl(code, limits, false);
}

DistanceResult min_distance_certified(const LinearCodeF16& code, int d_hint,
                                      const DistanceLimits& limits) {
    return certified_impl(code, d_hint, limits, true);
}

DistanceResult min_distance_certified_serial(const LinearCodeF16& code, int d_hint,
                                             const DistanceLimits& limits) {
    return certified_impl(code, d_hint, limits, false);
}

LeeProfile lee_profile(const GeneratorSet& gens, long long max_words) {
    LeeProfile prof;
    auto code = gray_span(gens);
    const int dim = code.dim();
    if (pow16(dim) > max_words)
        throw std::invalid_argument("lee_profile: code too large to enumerate");
    const int k = gens.k;
    const int n = gens.n;

    // message odometer over the Gray basis; pull each image codeword back
    // through theta per coordinate block and sum the Lee weights
    std::vector<uint8_t> msg(size_t(std::max(dim, 1)), 0);
    std::vector<F16> word(size_t(code.length), F16::zero());
    auto record = [&]() {
        int lee = 0;
        for (int t = 0; t < n; ++t) {
            std::vector<F16> block(word.begin() + t * 4 * k, word.begin() + (t + 1) * 4 * k);
            RElem r = theta_inv(k, block);
            lee += lee_weight(r);
        }
        prof.histogram[lee] += 1;
        int hw = hamming_weight(word);
        if (hw > 0) {
            if (prof.min_lee < 0 || lee < prof.min_lee) prof.min_lee = lee;
            if (prof.min_hamming < 0 || hw < prof.min_hamming) prof.min_hamming = hw;
        }
    };
    record(); // zero word
    if (dim == 0) return prof;
    long long total = pow16(dim);
    for (long long i = 1; i < total; ++i) {
        for (int pos = dim - 1; pos >= 0; --pos) {
            uint8_t old = msg[size_t(pos)];
            uint8_t next = uint8_t((old + 1) & 0xF);
            msg[size_t(pos)] = next;
            F16 delta = F16(old) + F16(next);
            for (size_t t = 0; t < word.size(); ++t) word[t] += code.basis[size_t(pos)][t] * delta;
            if (next != 0) break;
        }
        record();
    }
    return prof;
}

std::string distance_json(const DistanceResult& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["certificate"] = certificate_name(r.certificate);
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["work"] = {{"words_enumerated", r.words_enumerated},
                 {"subsets_checked", r.subsets_checked},
                 {"combos_searched", r.combos_searched}};
    std::string wit;
    for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) wit += " ";
        wit += r.witness[i].str();
    }
    j["witness"] = wit;
    return j.dump();
}

} // namespace cymat
