#pragma once

#include "inflect/rational.hpp"
#include "inflect/unipoly.hpp"

#include <optional>
#include <vector>

namespace inflect {

/// Rational roots of a nonzero polynomial, found as the monic linear factors
/// of its squarefree part. Candidates p/q come from the rational root test on
/// the integer-scaled polynomial; returns nullopt when the end coefficients are
/// too large to enumerate divisors of.
inline std::optional<std::vector<Rat>> rational_roots(const UniPoly& p, long limit = 1000000)
{
    std::vector<Rat> roots;
    if (p.degree() <= 0)
        return roots;
    UniPoly q = squarefree_part(p);
    if (q[0] == 0) {
        roots.push_back(Rat(0));
        q = exact_div(q, UniPoly::monomial(Rat(1), 1));
    }
    if (q.degree() <= 0)
        return roots;
    Int scale(1);
    for (const auto& c : q.coeffs())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    const Int lead = abs(Rat(q.leading() * scale).get_num());
    const Int tail = abs(Rat(q[0] * scale).get_num());
    if (lead > limit || tail > limit)
        return std::nullopt;
    const long L = lead.get_si();
    const long T = tail.get_si();
    for (long a = 1; a <= T; ++a) {
        if (T % a)
            continue;
        for (long b = 1; b <= L; ++b) {
            if (L % b)
                continue;
            for (long sign : {1L, -1L}) {
                Rat r(sign * a, b);
                r.canonicalize();
                if (r.get_den() != b)
                    continue;
                if (q.evaluate(r) == 0) {
                    roots.push_back(r);
                    q = exact_div(q, UniPoly::linear_root(r));
                }
            }
        }
    }
    return roots;
}

} // namespace inflect
