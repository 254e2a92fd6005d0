#pragma once

#include "inflect/biform.hpp"
#include "inflect/cluster.hpp"
#include "inflect/error.hpp"
#include "inflect/mpoly.hpp"
#include "inflect/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inflect {

/// A morphism P^1 -> P^m given by m+1 coprime binary forms of a common degree
/// d >= 1. Affine input in t is read in the chart t = t0/t1.
class RationalMap {
public:
    /// Homogenizes the affine coordinates to degree `declared_degree` (default:
    /// the largest affine degree) and validates coprimality, including a
    /// common power of t1 introduced by homogenization.
    static RationalMap make(std::vector<UniPoly> affine, std::optional<int> declared_degree = std::nullopt)
    {
        if (affine.size() < 2)
            throw InvalidInput("a rational map needs at least two coordinates");
        int max_deg = -1;
        for (const auto& p : affine)
            max_deg = std::max(max_deg, p.degree());
        if (max_deg < 0)
            throw InvalidInput("all coordinates are zero");
        const int d = declared_degree.value_or(max_deg);
        if (d < max_deg)
            throw InvalidInput("declared degree " + std::to_string(d) + " is below the coordinate degree " +
                               std::to_string(max_deg));
        if (d == 0)
            throw InvalidInput("constant map (degree 0)");
        if (max_deg < d)
            throw InvalidInput("coordinates share the common factor t1^" + std::to_string(d - max_deg) +
                               " (the point at infinity)");
        UniPoly g;
        for (const auto& p : affine)
            g = gcd(g, p);
        if (g.degree() > 0)
            throw InvalidInput("coordinates share the common factor " + g.to_string());
        RationalMap f;
        f.coords_ = std::move(affine);
        f.degree_ = d;
        return f;
    }

    int degree() const { return degree_; }
    int target_dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<UniPoly>& affine_coords() const { return coords_; }

    /// Coordinate i read in a chart: F_i(t, 1) or F_i(1, s).
    UniPoly chart_coord(std::size_t i, Chart chart) const
    {
        return chart == Chart::affine ? coords_.at(i) : coords_.at(i).reversed(degree_);
    }

    /// Coordinates as binary forms in two variables (t0, t1).
    std::vector<MPoly> homogeneous_coords() const
    {
        std::vector<MPoly> out;
        for (const auto& p : coords_) {
            MPoly h(2);
            for (int k = 0; k <= p.degree(); ++k)
                h.add_term({k, degree_ - k}, p[k]);
            out.push_back(std::move(h));
        }
        return out;
    }

    /// Precomposition with the fractional-linear map t -> (a t + b) / (c t + e).
    RationalMap reparametrized(const Rat& a, const Rat& b, const Rat& c, const Rat& e) const
    {
        if (a * e - b * c == 0)
            throw InvalidInput("singular coordinate change");
        const UniPoly num(std::vector<Rat>{b, a});
        const UniPoly den(std::vector<Rat>{e, c});
        std::vector<UniPoly> out;
        for (const auto& p : coords_) {
            UniPoly acc;
            for (int k = 0; k <= p.degree(); ++k)
                acc += p[k] * num.pow(static_cast<unsigned>(k)) * den.pow(static_cast<unsigned>(degree_ - k));
            out.push_back(std::move(acc));
        }
        return make(std::move(out), degree_);
    }

    std::string to_string(const std::string& var = "t") const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i)
            s += (i ? " : " : "") + coords_[i].to_string(var);
        return s + ")";
    }

    friend bool operator==(const RationalMap&, const RationalMap&) = default;

private:
    RationalMap() = default;

    std::vector<UniPoly> coords_;
    int degree_ = 0;
};

inline RationalMap make_rational_map(std::vector<UniPoly> affine, std::optional<int> declared_degree = std::nullopt)
{
    return RationalMap::make(std::move(affine), declared_degree);
}

/// The hyperelliptic curve y^2 = h(x), h squarefree.
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(UniPoly h) : h_(std::move(h))
    {
        if (h_.degree() < 1)
            throw InvalidInput("hyperelliptic polynomial must be nonconstant");
        if (!is_squarefree(h_))
            throw InvalidInput("hyperelliptic polynomial " + h_.to_string("x") + " is not squarefree");
    }

    const UniPoly& h() const { return h_; }
    int genus() const { return (h_.degree() + 1) / 2 - 1; }
    int canonical_degree() const { return 2 * genus() - 2; }
    /// The x-line point at infinity is a branch point iff deg h is odd.
    bool branched_at_infinity() const { return h_.degree() % 2 == 1; }

private:
    UniPoly h_;
};

/// Ramification over one cluster of the x-line: `sheets` points of C lie over
/// each x-value in `base` (1 at branch points of x, 2 elsewhere) and each has
/// multiplicity base.multiplicity.
struct SheetCluster {
    PointCluster base;
    int sheets = 2;

    long degree() const { return static_cast<long>(sheets) * base.point_count() * base.multiplicity; }
};

struct RamificationSummary {
    std::vector<SheetCluster> clusters;
    long total = 0;
    long expected = 0; ///< 2 deg f + 2g - 2
    bool matched = false;
};

/// Ramification divisor of phi o x on y^2 = h(x). With r = e_q(phi) - 1 at an
/// x-value q, a point over q has index e(x) (r + 1), so multiplicity 2r + 1 at
/// branch points of x and r on each of the two sheets elsewhere.
inline RamificationSummary hyperelliptic_ramification(const HyperellipticCurve& C, const RationalMap& phi)
{
    if (phi.target_dim() != 1)
        throw InvalidInput("phi must map to P^1");
    const UniPoly& p0 = phi.affine_coords()[0];
    const UniPoly& p1 = phi.affine_coords()[1];
    const UniPoly w = p0 * p1.derivative() - p1 * p0.derivative();
    if (w.is_zero())
        throw InvalidInput("phi is constant");
    const int e = phi.degree();

    std::map<std::pair<int, int>, UniPoly> merged;
    for (const auto& rf : refine(distinct_power_decomposition(w), {{C.h().monic(), 1}})) {
        const bool branch = rf.second > 0;
        const int m = branch ? 2 * rf.first + 1 : rf.first;
        if (m == 0)
            continue;
        auto [it, inserted] = merged.try_emplace({m, branch ? 1 : 2}, rf.factor);
        if (!inserted)
            it->second *= rf.factor;
    }
    RamificationSummary out;
    for (const auto& [key, q] : merged)
        out.clusters.push_back({PointCluster::finite(q, key.first), key.second});
    const int r_inf = order_at_infinity(w, 2 * e - 2);
    const bool branch_inf = C.branched_at_infinity();
    const int m_inf = branch_inf ? 2 * r_inf + 1 : r_inf;
    if (m_inf > 0)
        out.clusters.push_back({PointCluster::infinity(m_inf), branch_inf ? 1 : 2});
    for (const auto& c : out.clusters)
        out.total += c.degree();
    out.expected = 2L * (2L * e) + C.canonical_degree();
    out.matched = out.total == out.expected;
    return out;
}

} // namespace inflect
