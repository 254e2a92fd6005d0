#pragma once

#include "inflect/error.hpp"
#include "inflect/linalg.hpp"
#include "inflect/mpoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace inflect {

namespace detail {

inline std::size_t monomial_index(int i, int j)
{
    // Graded order: all monomials of degree < i + j come first.
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
}

/// dim_Q of Q[u,w] / ((F, G) + m^N), m = (u, w).
inline std::size_t truncated_quotient_dim(const MPoly& f, const MPoly& g, int n)
{
    const std::size_t cols = static_cast<std::size_t>(n * (n + 1) / 2);
    Matrix<Rat> rows;
    for (const MPoly* p : {&f, &g}) {
        int low = -1;
        for (const auto& [e, c] : p->terms())
            low = low < 0 ? e[0] + e[1] : std::min(low, e[0] + e[1]);
        if (low < 0 || low >= n)
            continue;
        for (int d = 0; d + low < n; ++d) {
            for (int a = 0; a <= d; ++a) {
                std::vector<Rat> row(cols);
                bool any = false;
                for (const auto& [e, c] : p->terms()) {
                    const int i = e[0] + (d - a);
                    const int j = e[1] + a;
                    if (i + j >= n)
                        continue;
                    row[monomial_index(i, j)] += c;
                    any = true;
                }
                if (any)
                    rows.push_back(std::move(row));
            }
        }
    }
    return cols - rank(std::move(rows));
}

} // namespace detail

inline int default_degree_bound(const MPoly& f, const MPoly& g)
{
    return 2 * std::max(f.total_degree(), 1) * std::max(g.total_degree(), 1) + 2;
}

/// Intersection multiplicity of F = G = 0 at the origin of the (u, w) plane:
/// the dimension of the local ring modulo (F, G). Computed from truncations
/// Q[u,w]/((F,G) + m^N) for N = 1, 2, ...; equal values at N and N+1 certify
/// (Nakayama) that m^N lies in the local ideal, so the value is final.
/// Returns nullopt ("unbounded") if no stabilization occurs up to the bound,
/// as happens when F and G share a component through the origin.
inline std::optional<int> local_multiplicity(const MPoly& f, const MPoly& g, int degree_bound)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw InvalidInput("local multiplicity needs bivariate polynomials");
    if (degree_bound < 1)
        throw InvalidInput("degree bound must be at least 1");
    const Exponents origin{0, 0};
    if (f.coefficient(origin) != 0 || g.coefficient(origin) != 0)
        return 0;
    std::size_t prev = detail::truncated_quotient_dim(f, g, 1);
    for (int n = 2; n <= degree_bound + 1; ++n) {
        const std::size_t cur = detail::truncated_quotient_dim(f, g, n);
        if (cur == prev)
            return static_cast<int>(cur);
        prev = cur;
    }
    return std::nullopt;
}

inline std::optional<int> local_multiplicity(const MPoly& f, const MPoly& g)
{
    return local_multiplicity(f, g, default_degree_bound(f, g));
}

} // namespace inflect
