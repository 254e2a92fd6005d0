#pragma once

#include "inflect/biform.hpp"
#include "inflect/linalg.hpp"
#include "inflect/unipoly.hpp"

#include <cstddef>
#include <vector>

namespace inflect {

/// Sylvester matrix of two binary forms in their stated degrees.
inline Matrix<UniPoly> sylvester_matrix(const BinaryForm& f, const BinaryForm& g)
{
    const std::size_t m = static_cast<std::size_t>(f.degree);
    const std::size_t n = static_cast<std::size_t>(g.degree);
    Matrix<UniPoly> s(m + n, std::vector<UniPoly>(m + n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            s[r][r + i] = f.coeffs[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i)
            s[n + r][r + i] = g.coeffs[i];
    return s;
}

/// Resultant of two binary forms over Q[t]. Because the forms are homogeneous
/// in (z0, z1) common zeros at z1 = 0 are seen without switching charts. The
/// result vanishes identically iff the forms share a factor of positive
/// z-degree over Q(t), or one of them is zero.
inline UniPoly binary_resultant(const BinaryForm& f, const BinaryForm& g)
{
    return determinant(sylvester_matrix(f, g));
}

} // namespace inflect
