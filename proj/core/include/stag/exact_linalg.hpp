#pragma once

#include <vector>

#include "stag/rational.hpp"

namespace stag {

/// Dense matrix over arbitrary-precision integers; rows of equal width.
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank by fraction-free (Bareiss) Gaussian elimination.  Exact; input is
/// taken by value and destroyed.
inline int rank_bareiss(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace stag
