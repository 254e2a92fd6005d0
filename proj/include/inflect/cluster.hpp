#pragma once

#include "inflect/error.hpp"
#include "inflect/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace inflect {

/// A Galois-stable group of points of a chart of P^1 sharing one multiplicity:
/// either the roots of a monic squarefree polynomial or the point at infinity.
struct PointCluster {
    UniPoly defining_poly; ///< empty when at_infinity
    bool at_infinity = false;
    int multiplicity = 0;

    static PointCluster finite(UniPoly q, int mult)
    {
        if (q.degree() <= 0 || !is_squarefree(q))
            throw InvalidInput("cluster polynomial must be squarefree and nonconstant");
        return {q.monic(), false, mult};
    }

    static PointCluster infinity(int mult) { return {UniPoly{}, true, mult}; }

    int point_count() const { return at_infinity ? 1 : defining_poly.degree(); }

    std::string label(const std::string& var = "t") const
    {
        return "(" + (at_infinity ? std::string("\xE2\x88\x9E") : defining_poly.to_string(var)) + ", " +
               std::to_string(multiplicity) + ")";
    }

    friend bool operator==(const PointCluster&, const PointCluster&) = default;
};

/// One squarefree piece of a common refinement of two factorizations, with the
/// exponent of each input on it.
struct RefinedFactor {
    UniPoly factor;
    int first = 0;
    int second = 0;
};

/// Refines two distinct-power decompositions into a pairwise coprime basis by
/// iterated gcds; each output factor has one well-defined pair of orders.
inline std::vector<RefinedFactor> refine(const std::vector<PowerFactor>& a, const std::vector<PowerFactor>& b)
{
    std::vector<RefinedFactor> out;
    std::vector<UniPoly> rest_b;
    for (const auto& pb : b)
        rest_b.push_back(pb.factor);
    for (const auto& pa : a) {
        UniPoly rest_a = pa.factor;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (rest_b[j].degree() <= 0 || rest_a.degree() <= 0)
                continue;
            UniPoly g = gcd(rest_a, rest_b[j]);
            if (g.degree() <= 0)
                continue;
            out.push_back({g, pa.multiplicity, b[j].multiplicity});
            rest_a = exact_div(rest_a, g);
            rest_b[j] = exact_div(rest_b[j], g);
        }
        if (rest_a.degree() > 0)
            out.push_back({rest_a.monic(), pa.multiplicity, 0});
    }
    for (std::size_t j = 0; j < b.size(); ++j)
        if (rest_b[j].degree() > 0)
            out.push_back({rest_b[j].monic(), 0, b[j].multiplicity});
    return out;
}

/// Merges factors with equal order pairs (products of coprime squarefree
/// polynomials stay squarefree) and sorts by (first, second).
inline std::vector<RefinedFactor> merge_equal_orders(const std::vector<RefinedFactor>& in)
{
    std::map<std::pair<int, int>, UniPoly> acc;
    for (const auto& f : in) {
        auto [it, inserted] = acc.try_emplace({f.first, f.second}, f.factor);
        if (!inserted)
            it->second *= f.factor;
    }
    std::vector<RefinedFactor> out;
    for (auto& [k, q] : acc)
        out.push_back({q.monic(), k.first, k.second});
    return out;
}

/// Total multiplicity -> product of the cluster polynomials carrying it, plus
/// the multiplicity at infinity. Two cluster lists describe the same divisor
/// iff their profiles agree.
struct DivisorProfile {
    std::map<int, UniPoly> finite;
    int at_infinity = 0;

    friend bool operator==(const DivisorProfile&, const DivisorProfile&) = default;
};

inline DivisorProfile profile_of(const std::vector<PointCluster>& clusters)
{
    DivisorProfile p;
    for (const auto& c : clusters) {
        if (c.multiplicity == 0)
            continue;
        if (c.at_infinity) {
            p.at_infinity += c.multiplicity;
            continue;
        }
        auto [it, inserted] = p.finite.try_emplace(c.multiplicity, c.defining_poly);
        if (!inserted)
            it->second *= c.defining_poly;
    }
    for (auto& [m, q] : p.finite)
        q = q.monic();
    return p;
}

inline long divisor_degree(const std::vector<PointCluster>& clusters)
{
    long total = 0;
    for (const auto& c : clusters)
        total += static_cast<long>(c.multiplicity) * c.point_count();
    return total;
}

} // namespace inflect
