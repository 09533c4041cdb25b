#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cymat {

/// Dense matrix over F2, rows packed into 64-bit blocks.  Sized for the
/// 16k x 16k basis solves (k <= 12) and the small subspace ranks used by the
/// classification sampler.
class BitMat {
public:
    BitMat() = default;
    BitMat(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(size_t(rows) * size_t(words_), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[idx(r, c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        if (v)
            data_[idx(r, c >> 6)] |= m;
        else
            data_[idx(r, c >> 6)] &= ~m;
    }
    void xor_row(int dst, int src) {
        for (int w = 0; w < words_; ++w) data_[idx(dst, w)] ^= data_[idx(src, w)];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int w = 0; w < words_; ++w) std::swap(data_[idx(a, w)], data_[idx(b, w)]);
    }
    bool row_empty(int r) const {
        for (int w = 0; w < words_; ++w)
            if (data_[idx(r, w)]) return false;
        return true;
    }

    int rank() const {
        BitMat t = *this;
        return t.rref();
    }

    /// In-place reduced row echelon form; returns rank.
    int rref() {
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (get(r, c)) { pivot = r; break; }
            if (pivot < 0) continue;
            swap_rows(rank, pivot);
            for (int r = 0; r < rows_; ++r)
                if (r != rank && get(r, c)) xor_row(r, rank);
            ++rank;
        }
        return rank;
    }

    /// Inverse of a square matrix; throws if singular.
    BitMat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("BitMat::inverse: not square");
        int n = rows_;
        BitMat aug(n, 2 * n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) aug.set(r, c, get(r, c));
            aug.set(r, n + r, true);
        }
        if (aug.rref() != n) throw std::domain_error("BitMat::inverse: singular matrix");
        BitMat inv(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
        return inv;
    }

    /// Matrix-vector product over F2 (vector given/returned as packed words).
    std::vector<uint64_t> mul_vec(const std::vector<uint64_t>& v) const {
        std::vector<uint64_t> out((rows_ + 63) / 64, 0);
        for (int r = 0; r < rows_; ++r) {
            uint64_t acc = 0;
            for (int w = 0; w < words_; ++w) acc ^= data_[idx(r, w)] & v[size_t(w)];
            if (__builtin_parityll(acc)) out[size_t(r >> 6)] |= uint64_t(1) << (r & 63);
        }
        return out;
    }

    bool operator==(const BitMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t idx(int r, int w) const { return size_t(r) * size_t(words_) + size_t(w); }
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

} // namespace cymat
