#pragma once

#include <vector>

#include "cymat/gf16.hpp"

namespace cymat {

using F16Vec = std::vector<F16>;
using F16Mat = std::vector<F16Vec>;

/// In-place reduced row echelon form with pivots chosen left to right; returns
/// the rank and drops zero rows, so the result is a canonical basis of the row
/// space (deterministic regardless of input row order).
int rref16(F16Mat& m);

/// Pivot columns of a matrix already in RREF.
std::vector<int> pivot_columns(const F16Mat& rref);

/// Parity-check matrix: a basis of the null space of the row space of `rref`
/// (which must be in RREF), as rows of length ncols.  G * H^T = 0.
F16Mat nullspace16(const F16Mat& rref, int ncols);

/// Reduces v against an RREF basis; returns true iff v lies in the row space.
bool in_rowspace16(const F16Mat& rref, const F16Vec& v);

int hamming_weight(const F16Vec& v);

} // namespace cymat
