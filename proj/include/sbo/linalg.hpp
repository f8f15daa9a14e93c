#pragma once

// Exact dense linear algebra over Q(i): Gaussian elimination and kernel
// bases.  Pivot rule: columns left to right, first unused row with a nonzero
// entry, so results are reproducible run to run.

#include "sbo/rational.hpp"

#include <vector>

namespace sbo {

using Vec = std::vector<GaussRational>;
using Mat = std::vector<Vec>; // row-major

// Basis of { x : M x = 0 }.  Free variables are set to 1 one at a time, in
// ascending column order.
inline std::vector<Vec> kernel_basis(Mat m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<long long> pivot_row_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[rank], m[sel]);
        GaussRational inv = GaussRational(1) / m[rank][col];
        for (std::size_t c = col; c < cols; ++c)
            m[rank][c] = inv * m[rank][c];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero())
                continue;
            GaussRational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivot_row_of_col[col] = static_cast<long long>(rank);
        ++rank;
    }
    std::vector<Vec> basis;
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] != -1)
            continue;
        Vec v(cols, GaussRational());
        v[col] = GaussRational(1);
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_row_of_col[c] == -1)
                continue;
            std::size_t r = static_cast<std::size_t>(pivot_row_of_col[c]);
            v[c] = -m[r][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank_of(const Mat& m, std::size_t cols) {
    if (m.empty())
        return 0;
    return cols - kernel_basis(m, cols).size();
}

// u = c * v for a single scalar c (u, v not both zero patterns required);
// returns false when no such scalar exists.
inline bool proportional(const Vec& u, const Vec& v, GaussRational* ratio_out = nullptr) {
    if (u.size() != v.size())
        return false;
    GaussRational ratio;
    bool have = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i].is_zero()) {
            if (!u[i].is_zero())
                return false;
            continue;
        }
        GaussRational r = u[i] / v[i];
        if (!have) {
            ratio = r;
            have = true;
        } else if (r != ratio) {
            return false;
        }
    }
    if (!have) { // v = 0: proportional iff u = 0
        for (const auto& x : u)
            if (!x.is_zero())
                return false;
        ratio = GaussRational();
    }
    if (ratio_out)
        *ratio_out = ratio;
    return true;
}

} // namespace sbo
