#pragma once

#include "inflect/error.hpp"
#include "inflect/rational.hpp"

#include <string>

namespace inflect {

/// Degrees of the h-classes of an O(a, b) family on P^m x P^n and the
/// resulting count of inflection points on a curve of genus g.
struct RhsSummary {
    Int N;       ///< members through n general points: b^n
    Int H_coeff; ///< degree of the divisor class on P^m: (n + 1) a b^n
    Int rhs_total;

    friend bool operator==(const RhsSummary&, const RhsSummary&) = default;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InvalidInput(what);
}

inline Int ipow(long base, long exp)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

} // namespace detail

struct HClassDegrees {
    Int N;
    Int H_coeff;

    friend bool operator==(const HClassDegrees&, const HClassDegrees&) = default;
};

inline HClassDegrees h_class_degrees(long a, long b, long n)
{
    detail::require(a >= 1 && b >= 1 && n >= 1, "h-class degrees need a, b, n >= 1");
    Int N = detail::ipow(b, n);
    Int H = Int(n + 1) * Int(a) * N;
    return {N, H};
}

inline Int rhs_total(long a, long b, long n, long d, long g)
{
    detail::require(d >= 1, "map degree must be at least 1");
    detail::require(g >= 0, "genus must be nonnegative");
    const auto [N, H] = h_class_degrees(a, b, n);
    return H * Int(d) + Int(n * (n + 1) / 2) * N * Int(2 * g - 2);
}

inline RhsSummary rhs_summary(long a, long b, long n, long d, long g)
{
    const auto [N, H] = h_class_degrees(a, b, n);
    return {N, H, rhs_total(a, b, n, d, g)};
}

/// Inflection count for a genus g curve in an abelian variety: (g - 1) n (n + 1)!.
inline Int abelian_rhs(long n, long g)
{
    detail::require(n >= 1, "abelian count needs n >= 1");
    detail::require(g >= 0, "genus must be nonnegative");
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return Int(g - 1) * Int(n) * fact;
}

} // namespace inflect
