#pragma once

#include "inflect/biform.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/family.hpp"
#include "inflect/linalg.hpp"
#include "inflect/report.hpp"
#include "inflect/unipoly.hpp"

#include <cstddef>
#include <vector>

namespace inflect {

/// S and its first n derivatives in the chart coordinate. Component k lives
/// in the graded piece twisted by omega^k, of bidegree (a d - 2k, b).
struct JetSection {
    Chart chart = Chart::affine;
    std::vector<ChartSection> components;
    std::vector<Bidegree> twist_degrees;
};

inline JetSection jet_section(const BiForm& S, int n, Chart chart)
{
    if (n < 1)
        throw InvalidInput("jet order must be at least 1");
    if (S.is_zero())
        throw InvalidInput("jet of the zero section");
    JetSection j{chart, {dehomogenize(S, chart)}, {S.bidegree()}};
    for (int k = 1; k <= n; ++k) {
        j.components.push_back(derivative(j.components.back()));
        j.twist_degrees.push_back({S.bidegree().x - 2 * k, S.bidegree().z});
    }
    return j;
}

/// det [G_i^(j)], rows j = 0..n (derivative order), columns i.
inline UniPoly wronskian(const std::vector<UniPoly>& G)
{
    const std::size_t n = G.size();
    Matrix<UniPoly> m(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        UniPoly d = G[i];
        for (std::size_t j = 0; j < n; ++j) {
            m[j][i] = d;
            d = d.derivative();
        }
    }
    return determinant(std::move(m));
}

/// A binary form in (t0, t1) of degree k read in a chart.
inline UniPoly chart_poly(const MPoly& binary, Chart chart)
{
    std::vector<Rat> c;
    for (const auto& [e, v] : binary.terms()) {
        const auto k = static_cast<std::size_t>(chart == Chart::affine ? e[0] : e[1]);
        if (c.size() <= k)
            c.resize(k + 1);
        c[k] += v;
    }
    return UniPoly(std::move(c));
}

/// The generators of a linear family pulled back along f, as binary forms in (t0, t1).
inline std::vector<MPoly> pulled_back_generators(const RationalMap& f, const DivisorFamily& fam)
{
    if (fam.x_arity() != static_cast<std::size_t>(f.target_dim()) + 1)
        throw InvalidInput("map target does not match family ambient space");
    const auto F = f.homogeneous_coords();
    std::vector<MPoly> out;
    for (const auto& g : fam.generators())
        out.push_back(g.substitute(F));
    return out;
}

/// Inflection divisor of f for a family linear in z, from the Wronskian of the
/// pulled-back generators in both charts.
inline InflectionReport wronskian_inflection(const RationalMap& f, const DivisorFamily& fam)
{
    const auto gens = pulled_back_generators(f, fam);
    InflectionReport r;
    r.method = "wronskian";
    UniPoly w[2];
    for (Chart chart : {Chart::affine, Chart::infinity}) {
        std::vector<UniPoly> G;
        for (const auto& g : gens)
            G.push_back(chart_poly(g, chart));
        const UniPoly W = wronskian(G);
        if (W.is_zero())
            return InflectionReport::degenerate_report(
                r.method, "WRONSKIAN_ZERO",
                "the pulled-back generators are linearly dependent (" + chart_name(chart) + " chart)");
        w[chart == Chart::affine ? 0 : 1] = W;
        r.charts.push_back({chart, UniPoly::constant(Rat(1)), W});
    }
    for (const auto& c : divisor_of(w[0]).clusters)
        r.clusters.push_back({c, Chart::affine, std::nullopt, std::nullopt});
    const int at_inf = w[1].low_order();
    if (at_inf > 0)
        r.clusters.push_back({PointCluster::infinity(at_inf), Chart::infinity, std::nullopt, std::nullopt});
    r.total = divisor_degree(r.point_clusters());
    return r;
}

} // namespace inflect
