#pragma once

#include "inflect/biform.hpp"
#include "inflect/cluster.hpp"
#include "inflect/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace inflect {

struct ReportCluster {
    PointCluster cluster;
    Chart chart = Chart::affine; ///< the chart the multiplicity was read in
    std::optional<int> vertical; ///< 2 b ord(content), localized solver only
    std::optional<int> proper;   ///< ord Res(S~, dS~), localized solver only

    friend bool operator==(const ReportCluster&, const ReportCluster&) = default;
};

/// Per-chart intermediate polynomials, kept for diagnosis.
struct ChartDiagnostics {
    Chart chart = Chart::affine;
    UniPoly content;     ///< gcd of the z-coefficients (1 for the Wronskian path)
    UniPoly discriminant; ///< resultant or Wronskian

    friend bool operator==(const ChartDiagnostics&, const ChartDiagnostics&) = default;
};

struct InflectionReport {
    std::string method; ///< "localized" or "wronskian"
    std::vector<ReportCluster> clusters;
    long total = 0;
    std::optional<std::string> degenerate; ///< reason; clusters empty when set
    std::string detail;
    std::vector<ChartDiagnostics> charts;

    bool is_degenerate() const { return degenerate.has_value(); }

    std::vector<PointCluster> point_clusters() const
    {
        std::vector<PointCluster> out;
        for (const auto& c : clusters)
            out.push_back(c.cluster);
        return out;
    }

    static InflectionReport degenerate_report(std::string method, std::string reason, std::string detail)
    {
        InflectionReport r;
        r.method = std::move(method);
        r.degenerate = std::move(reason);
        r.detail = std::move(detail);
        return r;
    }

    friend bool operator==(const InflectionReport&, const InflectionReport&) = default;
};

/// A finite divisor read in one chart, as (squarefree factor, order) pairs.
struct ChartDivisor {
    std::vector<PointCluster> clusters;
};

namespace detail {

/// Drops the root 0 from every cluster.
inline std::vector<PointCluster> away_from_zero(const std::vector<PointCluster>& in)
{
    std::vector<PointCluster> out;
    const UniPoly t = UniPoly::monomial(Rat(1), 1);
    for (const auto& c : in) {
        UniPoly q = c.defining_poly;
        if (q[0] == 0)
            q = exact_div(q, t);
        if (q.degree() > 0)
            out.push_back(PointCluster::finite(q, c.multiplicity));
    }
    return out;
}

} // namespace detail

/// True when the two charts describe the same divisor on the overlap
/// t = 1/s, t and s both nonzero.
inline bool charts_consistent(const ChartDivisor& affine, const ChartDivisor& infinity)
{
    auto a = detail::away_from_zero(affine.clusters);
    std::vector<PointCluster> b;
    for (const auto& c : detail::away_from_zero(infinity.clusters))
        b.push_back(PointCluster::finite(c.defining_poly.reversed(c.defining_poly.degree()), c.multiplicity));
    return profile_of(a) == profile_of(b);
}

/// Divisor of a nonzero polynomial in a chart.
inline ChartDivisor divisor_of(const UniPoly& p)
{
    ChartDivisor d;
    for (const auto& pf : distinct_power_decomposition(p))
        d.clusters.push_back(PointCluster::finite(pf.factor, pf.multiplicity));
    return d;
}

} // namespace inflect
