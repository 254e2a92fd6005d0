#pragma once

// Worked examples computed by hand, rerun by `--selftest`.

#include "inflect/biform.hpp"
#include "inflect/chow.hpp"
#include "inflect/curve.hpp"
#include "inflect/family.hpp"
#include "inflect/jet.hpp"
#include "inflect/local_multiplicity.hpp"
#include "inflect/parse.hpp"
#include "inflect/pullback.hpp"
#include "inflect/resultant.hpp"
#include "inflect/runner.hpp"
#include "inflect/solver.hpp"

#include <functional>
#include <string>
#include <vector>

namespace inflect {

struct SelfTestCase {
    std::string name;
    std::function<bool()> check;
};

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string error; ///< message of an unexpected exception
};

namespace detail {

inline UniPoly st_t(const char* s) { return parse_unipoly(s); }

inline RationalMap st_map(std::initializer_list<const char*> coords)
{
    std::vector<UniPoly> c;
    for (const char* s : coords)
        c.push_back(st_t(s));
    return make_rational_map(std::move(c));
}

inline BiForm st_tz(const char* s) { return parse_biform(s, {"t0", "t1"}, {"z0", "z1"}); }

inline std::vector<PointCluster> st_clusters(const InflectionReport& r) { return r.point_clusters(); }

inline bool st_run(const char* json, const std::string& mode, int exit_code)
{
    return run(parse_instance(json), mode).report.exit_code == exit_code;
}

} // namespace detail

inline std::vector<SelfTestCase> selftest_corpus()
{
    using namespace detail;
    const auto conic = [] { return st_map({"1", "t", "t^2"}); };
    const auto pencil = [] { return parse_family("z0*x1 - z1*x0", 3, 2); };
    const auto square = [] { return st_map({"t^2", "1"}); };
    const auto doubled = [] { return reparametrize_z(point_family(), st_map({"t^2", "1"})); };
    std::vector<SelfTestCase> c;

    c.push_back({"parse: dual conic form has bidegree (1,2)", [] {
                     const auto f = parse_biform("z0^2*x2 - 2*z0*z1*x1 + z1^2*x0", indexed_names("x", 3),
                                                 indexed_names("z", 2));
                     return f.bidegree() == Bidegree{1, 2};
                 }});
    c.push_back({"gcd(t^2+1, t+2) = 1", [] { return gcd(st_t("t^2 + 1"), st_t("t + 2")) == st_t("1"); }});
    c.push_back({"distinct powers of (t-1)^2 (t+2)^2", [] {
                     const auto d = distinct_power_decomposition(st_t("(t - 1)^2*(t + 2)^2"));
                     return d.size() == 1 && d[0].factor == st_t("t^2 + t - 2") && d[0].multiplicity == 2;
                 }});
    c.push_back({"content of t^2 z1 - t z0 is t", [] {
                     const auto s = content_in_t(st_tz("t0^2*z1 - t0*t1*z0"), Chart::affine);
                     return s.content == st_t("t") &&
                            s.primitive == dehomogenize(st_tz("t0*t1*z1 - t1^2*z0"), Chart::affine);
                 }});
    c.push_back({"content of (z1 - t z0)^2 is 1", [] {
                     return content_in_t(st_tz("(t1*z1 - t0*z0)^2"), Chart::affine).content == st_t("1");
                 }});
    c.push_back({"Res(t^2 z1 - z0, 2t z1) = -2t", [] {
                     const BinaryForm F(1, {st_t("-1"), st_t("t^2")});
                     const BinaryForm G(1, {st_t("0"), st_t("2*t")});
                     return binary_resultant(F, G) == st_t("-2*t");
                 }});
    c.push_back({"ord_t(6 t^2) = 2", [] { return order_at(st_t("6*t^2"), st_t("t")) == 2; }});
    c.push_back({"local multiplicity of (w - u^2, w + u^2) is 2", [] {
                     const std::vector<std::string> uw{"u", "w"};
                     return local_multiplicity(parse_polynomial("w - u^2", uw), parse_polynomial("w + u^2", uw)) == 2;
                 }});
    c.push_back({"pullback of the point family along (t^2:1)", [=] {
                     return pullback_section(square(), point_family()).poly() == st_tz("t0^2*z1 - t1^2*z0").poly();
                 }});
    c.push_back({"pullback of the pencil along (t:t^2:1) has content t0", [=] {
                     const auto S = pullback_section(st_map({"t", "t^2", "1"}), pencil());
                     return S.poly() == st_tz("z0*t0^2 - z1*t0*t1").poly();
                 }});
    c.push_back({"conic against its tangent lines pulls back to a square", [=] {
                     const MPoly root = st_tz("z0*t1 - z1*t0").poly();
                     const MPoly S = pullback_section(conic(), tangent_line_family(conic()).family).poly();
                     return S == root * root || S == -(root * root);
                 }});
    c.push_back({"genus 2, even model: 6 Weierstrass points", [] {
                     const auto r = hyperelliptic_ramification(HyperellipticCurve(st_t("t^6 - 1")), st_map({"t", "1"}));
                     return r.total == 6 && r.clusters.size() == 1 && r.clusters[0].base.multiplicity == 1 &&
                            r.clusters[0].sheets == 1;
                 }});
    c.push_back({"genus 2, odd model: 5 finite points and infinity", [] {
                     const auto r = hyperelliptic_ramification(HyperellipticCurve(st_t("t^5 - t")), st_map({"t", "1"}));
                     return r.total == 6 && r.clusters.size() == 2 && r.clusters[1].base.at_infinity;
                 }});
    c.push_back({"genus 2 composed with t^2: total 10", [=] {
                     const auto r = hyperelliptic_ramification(HyperellipticCurve(st_t("t^6 - 3*t + 1")), square());
                     return r.total == 10 && r.matched;
                 }});
    c.push_back({"flatness of the dual conic family", [] {
                     return flatness_check(parse_biform("z1^2*x0 - 2*z0*z1*x1 + z0^2*x2", indexed_names("x", 3),
                                                        indexed_names("z", 2)))
                                .verdict == Flatness::pass;
                 }});
    c.push_back({"complete quadratic series on P^1", [] {
                     const auto names = indexed_names("x", 2);
                     const auto fam = linear_series_family({parse_polynomial("x0^2", names),
                                                            parse_polynomial("x0*x1", names),
                                                            parse_polynomial("x1^2", names)});
                     return fam.n() == 2 && fam.bidegree().x == 2;
                 }});
    c.push_back({"tangent lines of the conic", [=] {
                     const auto fam = tangent_line_family(conic()).family;
                     return fam.form().poly() == parse_polynomial("z0^2*x0 - 2*z0*z1*x1 + z1^2*x2",
                                                                  {"x0", "x1", "x2", "z0", "z1"});
                 }});
    c.push_back({"tangent lines of (1:t:t^3): cusp at infinity stripped, bidegree (1,3)", [] {
                     return tangent_line_family(st_map({"1", "t", "t^3"})).family.bidegree() == Bidegree{1, 3};
                 }});
    c.push_back({"dual conic fiber over one end is a coordinate line", [=] {
                     const auto fam = tangent_line_family(conic()).family;
                     const auto names = indexed_names("x", 3);
                     return family_fiber(fam, {Rat(1), Rat(0)}) == parse_polynomial("x0", names) &&
                            family_fiber(fam, {Rat(0), Rat(1)}) == parse_polynomial("x2", names);
                 }});
    c.push_back({"h-classes for a = 2, b = 3, n = 1", [] {
                     return h_class_degrees(2, 3, 1) == HClassDegrees{Int(3), Int(12)};
                 }});
    c.push_back({"jet of (z1 - t z0)^2 shares a factor with it", [] {
                     const auto j = jet_section(st_tz("(t1*z1 - t0*z0)^2"), 1, Chart::affine);
                     return binary_resultant(to_binary(j.components[0]), to_binary(j.components[1])).is_zero();
                 }});
    c.push_back({"Wronskian (1, t^2, t^3) = 6 t^2", [] {
                     return wronskian({st_t("1"), st_t("t^2"), st_t("t^3")}) == st_t("6*t^2");
                 }});
    c.push_back({"Wronskian (t^3, 1) = -3 t^2", [] { return wronskian({st_t("t^3"), st_t("1")}) == st_t("-3*t^2"); }});
    c.push_back({"rational normal curves have no inflection", [] {
                     for (int n = 1; n <= 5; ++n) {
                         std::vector<UniPoly> coords;
                         for (int k = 0; k <= n; ++k)
                             coords.push_back(UniPoly::monomial(Rat(1), k));
                         const auto r = wronskian_inflection(make_rational_map(coords), hyperplane_family(n));
                         if (r.is_degenerate() || r.total != 0)
                             return false;
                     }
                     return true;
                 }});
    c.push_back({"cuspidal cubic: (t,2) and (inf,1)", [] {
                     const auto r = wronskian_inflection(st_map({"1", "t^2", "t^3"}), hyperplane_family(2));
                     return st_clusters(r) ==
                            std::vector<PointCluster>{PointCluster::finite(st_t("t"), 2), PointCluster::infinity(1)};
                 }});
    c.push_back({"(t^2:1) against the pencil (x0, x1)", [=] {
                     const auto names = indexed_names("x", 2);
                     const auto fam = linear_series_family({parse_polynomial("x0", names), parse_polynomial("x1", names)});
                     const auto r = wronskian_inflection(square(), fam);
                     return r.total == 2 && st_clusters(r) == std::vector<PointCluster>{PointCluster::finite(st_t("t"), 1),
                                                                                        PointCluster::infinity(1)};
                 }});
    c.push_back({"solver: (t^2:1), point family", [=] {
                     const auto r = inflection_divisor_n1(square(), point_family());
                     return r.charts[0].discriminant.monic() == st_t("t") &&
                            st_clusters(r) == std::vector<PointCluster>{PointCluster::finite(st_t("t"), 1),
                                                                         PointCluster::infinity(1)};
                 }});
    c.push_back({"solver: (t:t^2:1), pencil with a base point", [=] {
                     const auto r = inflection_divisor_n1(st_map({"t", "t^2", "1"}), pencil());
                     return r.total == 2 && r.clusters.size() == 1 && r.clusters[0].vertical == 2 &&
                            r.clusters[0].proper == 0;
                 }});
    c.push_back({"solver: (t^2:1), doubled point family", [=] {
                     const auto r = inflection_divisor_n1(square(), doubled());
                     return r.charts[0].discriminant.monic() == st_t("t^2") &&
                            st_clusters(r) == std::vector<PointCluster>{PointCluster::finite(st_t("t"), 2),
                                                                         PointCluster::infinity(2)};
                 }});
    c.push_back({"verify: (t^2:1), point family, 2 = 2", [=] {
                     const auto v = verify(square(), point_family());
                     return v.matched && v.lhs_total == 2;
                 }});
    c.push_back({"verify: (t:t^2:1), pencil, 2 = 2", [=] {
                     const auto v = verify(st_map({"t", "t^2", "1"}), pencil());
                     return v.matched && v.lhs_total == 2;
                 }});
    c.push_back({"verify: doubled point family, 4 = 4", [=] {
                     const auto v = verify(square(), doubled());
                     return v.matched && v.lhs_total == 4;
                 }});
    c.push_back({"cross-check: base point, solver 2 vs Wronskian 2", [=] {
                     const auto x = cross_oracle_check(st_map({"t", "t^2", "1"}), pencil());
                     return x.wronskian_checked && x.agrees();
                 }});
    c.push_back({"cross-check: (t^2:1), solver 1 vs Wronskian 1", [=] {
                     const auto x = cross_oracle_check(square(), point_family());
                     return x.wronskian_checked && x.agrees() && x.local_points_checked >= 1;
                 }});
    c.push_back({"conic against its tangent lines is everywhere inflectionary", [=] {
                     return degeneracy_check(conic(), tangent_line_family(conic()).family).verdict ==
                            Verdict::everywhere_inflectionary;
                 }});
    c.push_back({"run verify (t^2:1) point family exits 0", [] {
                     return st_run(R"({"map": ["t^2", "1"], "family": {"named": "point_family"}})", "verify", 0);
                 }});
    c.push_back({"run degenerate-check conic tangents exits 2", [] {
                     return st_run(R"({"map": ["1", "t", "t^2"], "family": {"named": "tangent_line_family"}})",
                                   "degenerate-check", 2);
                 }});
    c.push_back({"run rhs (1,1,2,4,0) gives 6", [] {
                     const auto r = run(parse_instance(R"({"rhs": {"a": 1, "b": 1, "n": 2, "d": 4, "g": 0}})"), "rhs");
                     return r.report.exit_code == 0 && r.report.outcome.at("rhs_total") == 6;
                 }});
    return c;
}

inline std::vector<SelfTestResult> run_selftest()
{
    std::vector<SelfTestResult> out;
    for (const auto& c : selftest_corpus()) {
        SelfTestResult r{c.name, false, {}};
        try {
            r.passed = c.check();
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace inflect
