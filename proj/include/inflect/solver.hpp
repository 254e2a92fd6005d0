#pragma once

#include "inflect/biform.hpp"
#include "inflect/chow.hpp"
#include "inflect/cluster.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/family.hpp"
#include "inflect/jet.hpp"
#include "inflect/local_multiplicity.hpp"
#include "inflect/pullback.hpp"
#include "inflect/report.hpp"
#include "inflect/resultant.hpp"
#include "inflect/roots.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inflect {

/// One chart of the localized computation: S = c * S~ with c the content in t
/// and R = Res_z(S~, dS~/dt).
struct ChartSolve {
    Chart chart = Chart::affine;
    ContentSplit split;
    UniPoly resultant;
    std::vector<RefinedFactor> factors; ///< first = ord c, second = ord R
};

namespace detail {

/// Reason the pulled-back section has no finite inflection divisor, if any.
struct ChartOutcome {
    std::optional<ChartSolve> solve;
    std::string reason;
    std::string detail;
};

inline ChartOutcome solve_chart(const BiForm& S, Chart chart)
{
    ChartSolve cs;
    cs.chart = chart;
    cs.split = content_in_t(S, chart);
    const ChartSection dS = derivative(cs.split.primitive);
    if (dS.is_zero())
        return {std::nullopt, "CONSTANT_IN_T", "the primitive part of the section does not depend on t"};
    cs.resultant = binary_resultant(to_binary(cs.split.primitive), to_binary(dS));
    if (cs.resultant.is_zero())
        return {std::nullopt, "HORIZONTAL_EXCESS",
                "the section and its t-derivative share a factor; every point of the curve is inflectionary"};
    std::vector<PowerFactor> c_parts = distinct_power_decomposition(cs.split.content);
    std::vector<PowerFactor> r_parts = distinct_power_decomposition(cs.resultant);
    cs.factors = merge_equal_orders(refine(c_parts, r_parts));
    return {std::move(cs), "", ""};
}

/// The forms F_alpha(z) in S = sum_alpha t0^alpha t1^(ad - alpha) F_alpha(z)
/// have a common factor exactly when f(C) lies in a fixed member.
inline std::optional<std::string> image_in_member(const BiForm& S)
{
    std::map<Exponents, MPoly, std::greater<>> parts;
    for (const auto& [e, c] : S.poly().terms())
        parts.try_emplace({e[0], e[1]}, 2).first->second.add_term({e[2], e[3]}, c);
    std::vector<QBinaryForm> forms;
    for (const auto& [te, p] : parts)
        forms.push_back(QBinaryForm::from_mpoly(p, S.bidegree().z));
    const QBinaryForm g = binary_gcd(forms);
    if (g.degree == 0)
        return std::nullopt;
    return binary_zero_witness(g);
}

} // namespace detail

/// Solves both charts, or returns a degenerate report.
struct PairSolve {
    std::optional<InflectionReport> degenerate;
    ChartSolve affine;
    ChartSolve infinity;
    int b = 0;
};

inline PairSolve solve_charts(const RationalMap& f, const DivisorFamily& fam)
{
    if (fam.n() != 1)
        throw InvalidInput("the localized solver needs a one-parameter family");
    PairSolve out;
    out.b = fam.bidegree().z;
    MPoly p = pullback_poly(f, fam);
    if (p.is_zero()) {
        out.degenerate =
            InflectionReport::degenerate_report("localized", "IMAGE_IN_FIBER", "the pullback vanishes identically");
        return out;
    }
    const BiForm S(std::move(p), 2, Bidegree{fam.bidegree().x * f.degree(), fam.bidegree().z});
    if (auto z = detail::image_in_member(S)) {
        out.degenerate = InflectionReport::degenerate_report("localized", "IMAGE_IN_FIBER",
                                                             "the curve lies in the member over z = " + *z);
        return out;
    }
    for (Chart chart : {Chart::affine, Chart::infinity}) {
        auto r = detail::solve_chart(S, chart);
        if (!r.solve) {
            out.degenerate = InflectionReport::degenerate_report("localized", r.reason, r.detail);
            return out;
        }
        (chart == Chart::affine ? out.affine : out.infinity) = std::move(*r.solve);
    }
    return out;
}

inline ChartDivisor chart_divisor(const ChartSolve& cs, int b)
{
    ChartDivisor d;
    for (const auto& f : cs.factors)
        d.clusters.push_back(PointCluster::finite(f.factor, 2 * b * f.first + f.second));
    return d;
}

/// Both charts agree on the overlap.
inline bool chart_consistency_check(const RationalMap& f, const DivisorFamily& fam)
{
    const PairSolve ps = solve_charts(f, fam);
    if (ps.degenerate)
        return true;
    return charts_consistent(chart_divisor(ps.affine, ps.b), chart_divisor(ps.infinity, ps.b));
}

/// Inflection divisor for a one-parameter family. A point over a root q of
/// the content c or of R = Res(S~, dS~) has multiplicity
/// 2 b ord_q(c) + ord_q(R): the vertical fiber over q counts twice b times its
/// multiplicity in the zero locus, the rest is proper intersection.
inline InflectionReport inflection_divisor_n1(const RationalMap& f, const DivisorFamily& fam)
{
    PairSolve ps = solve_charts(f, fam);
    if (ps.degenerate)
        return *ps.degenerate;
    const int b = ps.b;
    assert(charts_consistent(chart_divisor(ps.affine, b), chart_divisor(ps.infinity, b)));
    InflectionReport r;
    r.method = "localized";
    for (const ChartSolve* cs : {&ps.affine, &ps.infinity})
        r.charts.push_back({cs->chart, cs->split.content, cs->resultant});
    for (const auto& rf : ps.affine.factors) {
        const int v = 2 * b * rf.first;
        r.clusters.push_back({PointCluster::finite(rf.factor, v + rf.second), Chart::affine, v, rf.second});
    }
    const int v_inf = 2 * b * ps.infinity.split.content.low_order();
    const int p_inf = ps.infinity.resultant.low_order();
    if (v_inf + p_inf > 0)
        r.clusters.push_back({PointCluster::infinity(v_inf + p_inf), Chart::infinity, v_inf, p_inf});
    r.total = divisor_degree(r.point_clusters());
    return r;
}

/// Localized solver for n = 1, Wronskian for linear families with n >= 2.
inline InflectionReport inflection_divisor(const RationalMap& f, const DivisorFamily& fam)
{
    if (fam.n() == 1)
        return inflection_divisor_n1(f, fam);
    if (fam.bidegree().z == 1)
        return wronskian_inflection(f, fam);
    throw NotImplemented("the localized class for nonlinear families with n >= 2 is not implemented; "
                         "families linear in z are handled by the Wronskian path");
}

struct VerificationResult {
    Int lhs_total;
    RhsSummary rhs;
    bool matched = false;
    InflectionReport report;
};

/// Compares the inflection count of f with the closed-form total. Only
/// rational source curves are supported, so g must be 0.
inline VerificationResult verify(const RationalMap& f, const DivisorFamily& fam, long g = 0)
{
    if (g != 0)
        throw InvalidInput("the solver handles rational curves only (genus 0)");
    VerificationResult v;
    v.report = inflection_divisor(f, fam);
    v.rhs = rhs_summary(fam.bidegree().x, fam.bidegree().z, fam.n(), f.degree(), g);
    v.lhs_total = v.report.total;
    v.matched = !v.report.is_degenerate() && v.lhs_total == v.rhs.rhs_total;
    return v;
}

enum class Verdict { nondegenerate_finite, degenerate_image, everywhere_inflectionary };

inline std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::nondegenerate_finite:
        return "NONDEGENERATE_FINITE";
    case Verdict::degenerate_image:
        return "DEGENERATE_IMAGE";
    default:
        return "EVERYWHERE_INFLECTIONARY";
    }
}

struct DegeneracyVerdict {
    Verdict verdict = Verdict::nondegenerate_finite;
    std::string reason; ///< empty when nondegenerate
    std::string detail;
};

inline DegeneracyVerdict classify(const InflectionReport& r)
{
    if (!r.degenerate)
        return {};
    const Verdict v =
        *r.degenerate == "HORIZONTAL_EXCESS" ? Verdict::everywhere_inflectionary : Verdict::degenerate_image;
    return {v, *r.degenerate, r.detail};
}

inline DegeneracyVerdict degeneracy_check(const RationalMap& f, const DivisorFamily& fam)
{
    return classify(inflection_divisor(f, fam));
}

struct CrossOracleReport {
    bool wronskian_checked = false;
    bool wronskian_agrees = true;
    int local_points_checked = 0;
    bool local_agrees = true;
    std::string detail;

    bool agrees() const { return wronskian_agrees && local_agrees; }
};

namespace detail {

/// The chart section evaluated near t = p in local coordinates (u, w), with
/// z = (z0 + w : 1) or, when z0 is omitted, z = (1 : w).
inline MPoly local_form(const ChartSection& s, const Rat& p, const std::optional<Rat>& z0)
{
    const MPoly u = MPoly::variable(2, 0);
    const MPoly w = MPoly::variable(2, 1);
    const MPoly one = MPoly::constant(2, Rat(1));
    const MPoly zc0 = z0 ? w + MPoly::constant(2, *z0) : one;
    const MPoly zc1 = z0 ? one : w;
    const UniPoly shift(std::vector<Rat>{p, Rat(1)});
    MPoly out(2);
    for (const auto& [ze, c] : s.coeffs) {
        const UniPoly cu = c.compose(shift);
        MPoly cm(2);
        for (int k = 0; k <= cu.degree(); ++k)
            cm.add_term({k, 0}, cu[k]);
        out += cm * zc0.pow(static_cast<unsigned>(ze[0])) * zc1.pow(static_cast<unsigned>(ze[1]));
    }
    return out;
}

inline QBinaryForm binary_at(const ChartSection& s, const Rat& p)
{
    std::vector<Rat> c(static_cast<std::size_t>(s.z_degree) + 1);
    for (const auto& [ze, poly] : s.coeffs)
        c[static_cast<std::size_t>(ze[0])] = poly.evaluate(p);
    return {s.z_degree, UniPoly(std::move(c))};
}

/// Sum of local intersection multiplicities of S~ and dS~ over t = p when all
/// common zeros have rational z; nullopt otherwise, or -1 on no stabilization.
inline std::optional<int> local_sum(const ChartSection& prim, const ChartSection& dprim, const Rat& p)
{
    const QBinaryForm g = binary_gcd({binary_at(prim, p), binary_at(dprim, p)});
    std::vector<std::optional<Rat>> points;
    if (g.z1_order() > 0)
        points.push_back(std::nullopt);
    const auto roots = rational_roots(g.dehom);
    if (!roots || static_cast<int>(roots->size()) != squarefree_part(g.dehom).degree())
        return std::nullopt;
    for (const auto& r : *roots)
        points.push_back(r);
    int sum = 0;
    for (const auto& z : points) {
        const auto m = local_multiplicity(local_form(prim, p, z), local_form(dprim, p, z));
        if (!m)
            return -1;
        sum += *m;
    }
    return sum;
}

} // namespace detail

/// Compares the localized solver with the Wronskian (linear one-parameter
/// families) and resultant orders with local intersection multiplicities at
/// rational points.
inline CrossOracleReport cross_oracle_check(const RationalMap& f, const DivisorFamily& fam, int max_points = 8)
{
    CrossOracleReport out;
    const InflectionReport solver = inflection_divisor_n1(f, fam);
    if (fam.bidegree().z == 1) {
        const InflectionReport wr = wronskian_inflection(f, fam);
        out.wronskian_checked = true;
        if (solver.is_degenerate() || wr.is_degenerate())
            out.wronskian_agrees = solver.is_degenerate() == wr.is_degenerate();
        else
            out.wronskian_agrees = profile_of(solver.point_clusters()) == profile_of(wr.point_clusters());
        if (!out.wronskian_agrees)
            out.detail += "solver total " + std::to_string(solver.total) + " vs Wronskian total " +
                          std::to_string(wr.total) + "; ";
    }
    if (solver.is_degenerate())
        return out;
    const PairSolve ps = solve_charts(f, fam);
    for (const ChartSolve* cs : {&ps.affine, &ps.infinity}) {
        const ChartSection dprim = derivative(cs->split.primitive);
        std::vector<Rat> pts;
        if (cs->chart == Chart::affine) {
            if (auto r = rational_roots(cs->resultant))
                pts = *r;
        } else if (cs->resultant[0] == 0) {
            pts.push_back(Rat(0));
        }
        for (const auto& p : pts) {
            if (out.local_points_checked >= max_points)
                return out;
            const auto sum = detail::local_sum(cs->split.primitive, dprim, p);
            if (!sum)
                continue;
            ++out.local_points_checked;
            const int ord = order_at(cs->resultant, UniPoly::linear_root(p));
            if (*sum != ord) {
                out.local_agrees = false;
                out.detail += chart_name(cs->chart) + " chart t = " + to_string(p) + ": ord R = " +
                              std::to_string(ord) + ", local sum = " + std::to_string(*sum) + "; ";
            }
        }
    }
    return out;
}

} // namespace inflect
