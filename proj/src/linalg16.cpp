#include "cymat/linalg16.hpp"

#include <algorithm>

namespace cymat {

int rref16(F16Mat& m) {
    if (m.empty()) return 0;
    size_t ncols = m[0].size();
    int rank = 0;
    for (size_t col = 0; col < ncols && rank < int(m.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < int(m.size()); ++r) {
            if (!m[size_t(r)][col].is_zero()) { piv = r; break; }
        }
        if (piv < 0) continue;
        std::swap(m[size_t(rank)], m[size_t(piv)]);
        F16 inv = m[size_t(rank)][col].inv();
        for (auto& a : m[size_t(rank)]) a *= inv;
        for (int r = 0; r < int(m.size()); ++r) {
            if (r == rank) continue;
            F16 f = m[size_t(r)][col];
            if (f.is_zero()) continue;
            for (size_t c = col; c < ncols; ++c) m[size_t(r)][c] += f * m[size_t(rank)][c];
        }
        ++rank;
    }
    m.resize(size_t(rank));
    return rank;
}

std::vector<int> pivot_columns(const F16Mat& rref) {
    std::vector<int> piv;
    for (const auto& row : rref) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_zero()) { piv.push_back(int(c)); break; }
        }
    }
    return piv;
}

F16Mat nullspace16(const F16Mat& rref, int ncols) {
    auto piv = pivot_columns(rref);
    std::vector<bool> is_piv(size_t(ncols), false);
    for (int c : piv) is_piv[size_t(c)] = true;
    F16Mat h;
    for (int q = 0; q < ncols; ++q) {
        if (is_piv[size_t(q)]) continue;
        F16Vec row(size_t(ncols), F16::zero());
        row[size_t(q)] = F16::one();
        for (size_t r = 0; r < rref.size(); ++r) row[size_t(piv[r])] = rref[r][size_t(q)];
        h.push_back(std::move(row));
    }
    return h;
}

bool in_rowspace16(const F16Mat& rref, const F16Vec& v) {
    F16Vec w = v;
    auto piv = pivot_columns(rref);
    for (size_t r = 0; r < rref.size(); ++r) {
        F16 f = w[size_t(piv[r])];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < w.size(); ++c) w[c] += f * rref[r][c];
    }
    return std::all_of(w.begin(), w.end(), [](F16 a) { return a.is_zero(); });
}

int hamming_weight(const F16Vec& v) {
    int w = 0;
    for (auto a : v)
        if (!a.is_zero()) ++w;
    return w;
}

} // namespace cymat
