#pragma once

#include "inflect/rational.hpp"
#include "inflect/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace inflect {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant over Q[t] by fraction-free (Bareiss) elimination. Every
/// division is exact; row swaps track the sign.
inline UniPoly determinant(Matrix<UniPoly> m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw InvalidInput("determinant of a non-square matrix");
    if (n == 0)
        return UniPoly::constant(Rat(1));
    bool negate = false;
    UniPoly prev = UniPoly::constant(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Lowest-degree pivot keeps intermediate growth down.
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (piv == n || m[i][k].degree() < m[piv][k].degree()))
                piv = i;
        if (piv == n)
            return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly{};
        }
        prev = m[k][k];
    }
    UniPoly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank(Matrix<Rat> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            const Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0)
                    m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// A nonzero vector v with m v = 0, or nullopt when the columns are independent.
inline std::optional<std::vector<Rat>> kernel_vector(Matrix<Rat> m, std::size_t cols)
{
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (auto& v : m[r])
            v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() == cols)
        return std::nullopt;
    std::size_t free = 0;
    while (free < cols && std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end())
        ++free;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -m[i][free];
    return v;
}

} // namespace inflect
