#include "inflect/chow.hpp"
#include "inflect/parse.hpp"
#include "inflect/random.hpp"
#include "inflect/solver.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace inflect;

namespace {

UniPoly T(const char* s) { return parse_unipoly(s); }

MPoly xpoly(const char* s, std::size_t xa) { return parse_polynomial(s, indexed_names("x", xa)); }

RationalMap random_map(Rng& rng, int target, int d, long bound = 6)
{
    for (;;) {
        std::vector<UniPoly> c;
        for (int i = 0; i <= target; ++i)
            c.push_back(random_poly(rng, static_cast<int>(uniform_int(rng, 0, d)), bound));
        c[static_cast<std::size_t>(uniform_int(rng, 0, target))] = random_poly(rng, d, bound);
        try {
            return make_rational_map(std::move(c), d);
        } catch (const InvalidInput&) {
        }
    }
}

std::optional<DivisorFamily> random_family(Rng& rng, std::size_t xa, int a, int b, long bound = 4)
{
    try {
        return DivisorFamily(BiForm(random_biform_poly(rng, xa, 2, a, b, bound), xa));
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

/// Multiplicity -> product of the cluster forms in (t0, t1), normalized.
std::map<int, MPoly> divisor_forms(const InflectionReport& r)
{
    std::map<int, MPoly> out;
    for (const auto& rc : r.clusters) {
        const auto& c = rc.cluster;
        MPoly f(2);
        if (c.at_infinity) {
            f.add_term({0, 1}, Rat(1));
        } else {
            const int k = c.defining_poly.degree();
            for (int i = 0; i <= k; ++i)
                f.add_term({i, k - i}, c.defining_poly[i]);
        }
        auto [it, inserted] = out.try_emplace(c.multiplicity, f);
        if (!inserted)
            it->second = it->second * f;
    }
    for (auto& [m, f] : out)
        f = f.primitive();
    return out;
}

DivisorProfile scaled_profile(const InflectionReport& r, int e)
{
    DivisorProfile p = profile_of(r.point_clusters());
    DivisorProfile q;
    q.at_infinity = p.at_infinity * e;
    for (const auto& [m, poly] : p.finite)
        q.finite.emplace(m * e, poly);
    return q;
}

} // namespace

TEST(Solver, SquareMapAgainstPoints)
{
    const auto r = inflection_divisor_n1(make_rational_map({T("t^2"), T("1")}), point_family());
    ASSERT_FALSE(r.is_degenerate());
    EXPECT_EQ(r.charts[0].content, T("1"));
    EXPECT_EQ(r.charts[0].discriminant, T("-2*t"));
    ASSERT_EQ(r.clusters.size(), 2u);
    EXPECT_EQ(r.clusters[0].cluster, PointCluster::finite(T("t"), 1));
    EXPECT_EQ(r.clusters[0].vertical, 0);
    EXPECT_EQ(r.clusters[0].proper, 1);
    EXPECT_EQ(r.clusters[1].cluster, PointCluster::infinity(1));
    EXPECT_EQ(r.total, 2);
}

TEST(Solver, PencilWithBasePointOnConic)
{
    const auto f = make_rational_map({T("t"), T("t^2"), T("1")});
    const auto fam = parse_family("z0*x1 - z1*x0", 3, 2);
    const auto r = inflection_divisor_n1(f, fam);
    ASSERT_FALSE(r.is_degenerate());
    EXPECT_EQ(r.charts[0].content, T("t"));
    EXPECT_EQ(r.charts[0].discriminant.degree(), 0);
    EXPECT_EQ(r.charts[1].content, T("1"));
    EXPECT_EQ(r.charts[1].discriminant.degree(), 0);
    ASSERT_EQ(r.clusters.size(), 1u);
    EXPECT_EQ(r.clusters[0].cluster, PointCluster::finite(T("t"), 2));
    EXPECT_EQ(r.clusters[0].vertical, 2);
    EXPECT_EQ(r.clusters[0].proper, 0);
    EXPECT_EQ(Int(r.total), rhs_total(1, 1, 1, 2, 0));
}

TEST(Solver, ReparametrizedPointFamilyDoublesEverything)
{
    const auto f = make_rational_map({T("t^2"), T("1")});
    const auto fam = reparametrize_z(point_family(), make_rational_map({T("t^2"), T("1")}));
    const auto r = inflection_divisor_n1(f, fam);
    ASSERT_FALSE(r.is_degenerate());
    EXPECT_EQ(r.charts[0].discriminant.monic(), T("t^2"));
    ASSERT_EQ(r.clusters.size(), 2u);
    EXPECT_EQ(r.clusters[0].cluster, PointCluster::finite(T("t"), 2));
    EXPECT_EQ(r.clusters[1].cluster, PointCluster::infinity(2));
    EXPECT_EQ(r.total, 4);
    EXPECT_EQ(rhs_total(1, 2, 1, 2, 0), Int(4));
}

TEST(Solver, RejectsWrongShapes)
{
    EXPECT_THROW(inflection_divisor_n1(make_rational_map({T("t"), T("t^2"), T("1")}), hyperplane_family(2)),
                 InvalidInput);
    EXPECT_THROW(inflection_divisor_n1(make_rational_map({T("t"), T("1")}), hyperplane_family(2)), InvalidInput);
    const DivisorFamily nonlinear(parse_biform("z0^2*x0 + z1^2*x1 + z2^2*(x0 + x1)", {"x0", "x1"}, {"z0", "z1", "z2"}));
    EXPECT_THROW(inflection_divisor(make_rational_map({T("t"), T("1")}), nonlinear), NotImplemented);
    // Linear families with n >= 2 go through the Wronskian.
    const auto v = verify(make_rational_map({T("1"), T("t^2"), T("t^3")}), hyperplane_family(2));
    EXPECT_EQ(v.report.method, "wronskian");
    EXPECT_EQ(v.lhs_total, Int(3));
    EXPECT_TRUE(v.matched);
    EXPECT_THROW(verify(make_rational_map({T("t^2"), T("1")}), point_family(), 1), InvalidInput);
}

TEST(Degeneracy, Examples)
{
    const auto conic = make_rational_map({T("1"), T("t"), T("t^2")});
    const auto dual = degeneracy_check(conic, tangent_line_family(conic).family);
    EXPECT_EQ(dual.verdict, Verdict::everywhere_inflectionary);
    EXPECT_EQ(dual.reason, "HORIZONTAL_EXCESS");

    EXPECT_EQ(degeneracy_check(make_rational_map({T("t^2"), T("1")}), point_family()).verdict,
              Verdict::nondegenerate_finite);

    const auto conics = parse_family("z0*x0*x1 + z1*x0*x2", 3, 2);
    const auto line = make_rational_map({T("0"), T("t"), T("1")});
    const auto in_base = degeneracy_check(line, conics);
    EXPECT_EQ(in_base.verdict, Verdict::degenerate_image);
    EXPECT_EQ(in_base.reason, "IMAGE_IN_FIBER");

    // The line x1 = 0 is the member over (0:1) of the pencil z0 x0 + z1 x1.
    const auto pencil = parse_family("z0*x0 + z1*x1", 3, 2);
    const auto in_member = degeneracy_check(make_rational_map({T("t"), T("0"), T("1")}), pencil);
    EXPECT_EQ(in_member.verdict, Verdict::degenerate_image);
    EXPECT_NE(in_member.detail.find("(0:1)"), std::string::npos) << in_member.detail;

    const auto r = inflection_divisor_n1(conic, tangent_line_family(conic).family);
    EXPECT_TRUE(r.clusters.empty());
    EXPECT_EQ(r.total, 0);
}

TEST(Verify, Examples)
{
    const auto sq = make_rational_map({T("t^2"), T("1")});
    const auto a = verify(sq, point_family());
    EXPECT_EQ(a.lhs_total, Int(2));
    EXPECT_EQ(a.rhs.rhs_total, Int(2));
    EXPECT_TRUE(a.matched);

    const auto b = verify(make_rational_map({T("t"), T("t^2"), T("1")}), parse_family("z0*x1 - z1*x0", 3, 2));
    EXPECT_EQ(b.lhs_total, Int(2));
    EXPECT_TRUE(b.matched);

    const auto c = verify(sq, reparametrize_z(point_family(), sq));
    EXPECT_EQ(c.lhs_total, Int(4));
    EXPECT_EQ(c.rhs.rhs_total, Int(4));
    EXPECT_TRUE(c.matched);

    const auto conic = make_rational_map({T("1"), T("t"), T("t^2")});
    const auto d = verify(conic, tangent_line_family(conic).family);
    EXPECT_TRUE(d.report.is_degenerate());
    EXPECT_FALSE(d.matched);
}

TEST(CrossOracle, Examples)
{
    const auto base = cross_oracle_check(make_rational_map({T("t"), T("t^2"), T("1")}),
                                         parse_family("z0*x1 - z1*x0", 3, 2));
    EXPECT_TRUE(base.wronskian_checked);
    EXPECT_TRUE(base.agrees()) << base.detail;
    const auto w = wronskian_inflection(make_rational_map({T("t"), T("t^2"), T("1")}),
                                        parse_family("z0*x1 - z1*x0", 3, 2));
    // Up to the sign fixed by the generator order.
    EXPECT_EQ(w.charts[0].discriminant.monic(), T("t^2"));

    const auto rh = cross_oracle_check(make_rational_map({T("t^2"), T("1")}), point_family());
    EXPECT_TRUE(rh.agrees());
    EXPECT_GE(rh.local_points_checked, 2);
}

TEST(Solver, TheoremHoldsForRandomFamilies)
{
    int nondegenerate = 0;
    for (std::uint64_t k = 0; k < 160; ++k) {
        Rng rng = make_rng(1234, k);
        const std::size_t xa = static_cast<std::size_t>(uniform_int(rng, 2, 3));
        const int a = static_cast<int>(uniform_int(rng, 1, 2));
        const int b = static_cast<int>(uniform_int(rng, 1, 3));
        const int d = static_cast<int>(uniform_int(rng, 1, 5));
        auto fam = random_family(rng, xa, a, b);
        if (!fam)
            continue;
        const auto f = random_map(rng, static_cast<int>(xa) - 1, d);
        const auto v = verify(f, *fam);
        for (const auto& c : v.report.clusters)
            EXPECT_GE(c.cluster.multiplicity, 1);
        if (v.report.is_degenerate())
            continue;
        ++nondegenerate;
        EXPECT_EQ(v.lhs_total, Int(2 * a * b * d - 2 * b)) << f.to_string() << " " << fam->to_string();
        EXPECT_TRUE(v.matched);
        EXPECT_TRUE(chart_consistency_check(f, *fam));
    }
    EXPECT_GE(nondegenerate, 100);
}

TEST(Solver, FunctorialityInTheParameter)
{
    int checked = 0;
    for (std::uint64_t k = 0; k < 30; ++k) {
        Rng rng = make_rng(555, k);
        const std::size_t xa = static_cast<std::size_t>(uniform_int(rng, 2, 3));
        auto fam = random_family(rng, xa, static_cast<int>(uniform_int(rng, 1, 2)), static_cast<int>(uniform_int(rng, 1, 2)));
        if (!fam)
            continue;
        const auto f = random_map(rng, static_cast<int>(xa) - 1, static_cast<int>(uniform_int(rng, 1, 4)));
        const int e = static_cast<int>(uniform_int(rng, 2, 3));
        const auto h = random_map(rng, 1, e, 4);
        const auto base = inflection_divisor_n1(f, *fam);
        const auto pulled = inflection_divisor_n1(f, reparametrize_z(*fam, h));
        ASSERT_EQ(base.is_degenerate(), pulled.is_degenerate());
        if (base.is_degenerate())
            continue;
        ++checked;
        EXPECT_EQ(pulled.total, e * base.total);
        EXPECT_EQ(profile_of(pulled.point_clusters()), scaled_profile(base, e));
    }
    EXPECT_GE(checked, 20);
}

TEST(Solver, AgreesWithWronskianOnLinearFamilies)
{
    int checked = 0;
    int with_content = 0;
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng = make_rng(99, k);
        const std::size_t xa = static_cast<std::size_t>(uniform_int(rng, 2, 3));
        auto fam = random_family(rng, xa, static_cast<int>(uniform_int(rng, 1, 2)), 1);
        if (!fam)
            continue;
        RationalMap f = random_map(rng, static_cast<int>(xa) - 1, static_cast<int>(uniform_int(rng, 1, 4)));
        if (k % 2 == 0 && xa == 3) {
            // Force base points: the pencil z0 L0 + z1 L1 meets the curve at
            // the zeros of q in its base point L0 = L1 = 0.
            const UniPoly q = random_poly(rng, static_cast<int>(uniform_int(rng, 1, 2)), 3);
            const UniPoly u0 = random_poly(rng, 1, 4), u1 = random_poly(rng, 1, 4);
            const UniPoly u2 = random_poly(rng, q.degree() + 1, 4);
            fam = linear_series_family({xpoly("x0", 3), xpoly("x1", 3)});
            try {
                f = make_rational_map({q * u0, q * u1, u2});
            } catch (const InvalidInput&) {
                continue;
            }
        }
        const auto c = cross_oracle_check(f, *fam);
        ASSERT_TRUE(c.wronskian_checked);
        EXPECT_TRUE(c.agrees()) << f.to_string() << " " << fam->to_string() << ": " << c.detail;
        const auto r = inflection_divisor_n1(f, *fam);
        if (r.is_degenerate())
            continue;
        ++checked;
        for (const auto& rc : r.clusters)
            if (rc.vertical.value_or(0) > 0)
                ++with_content;
    }
    EXPECT_GE(checked, 30);
    EXPECT_GE(with_content, 10);
}

TEST(Solver, ResultantOrdersMatchLocalMultiplicities)
{
    int points = 0;
    for (std::uint64_t k = 0; k < 40; ++k) {
        Rng rng = make_rng(777, k);
        auto fam = random_family(rng, 2, 1, static_cast<int>(uniform_int(rng, 1, 2)), 3);
        if (!fam)
            continue;
        // Maps with rational ramification: t -> (t - r)^k-type coordinates.
        const long r0 = uniform_int(rng, -3, 3);
        const UniPoly lin = UniPoly::linear_root(Rat(r0));
        const int e = static_cast<int>(uniform_int(rng, 2, 3));
        std::optional<RationalMap> f;
        try {
            f = make_rational_map({lin.pow(static_cast<unsigned>(e)), random_poly(rng, 1, 3).pow(static_cast<unsigned>(e - 1))}, e);
        } catch (const InvalidInput&) {
            continue;
        }
        const auto c = cross_oracle_check(*f, *fam);
        EXPECT_TRUE(c.local_agrees) << c.detail;
        points += c.local_points_checked;
    }
    EXPECT_GE(points, 20);
}

TEST(Solver, CoordinateChangeInT)
{
    Rng rng = make_rng(4321, 0);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t xa = static_cast<std::size_t>(uniform_int(rng, 2, 3));
        auto fam = random_family(rng, xa, 1, static_cast<int>(uniform_int(rng, 1, 2)));
        if (!fam)
            continue;
        const auto f = random_map(rng, static_cast<int>(xa) - 1, static_cast<int>(uniform_int(rng, 1, 4)));
        Rat a(nonzero_int(rng, 3)), b(uniform_int(rng, -3, 3)), c(uniform_int(rng, -3, 3)), e(nonzero_int(rng, 3));
        if (a * e - b * c == 0)
            continue;
        const auto g = f.reparametrized(a, b, c, e);
        const auto rf = inflection_divisor_n1(f, *fam);
        const auto rg = inflection_divisor_n1(g, *fam);
        ASSERT_EQ(rf.is_degenerate(), rg.is_degenerate());
        if (rf.is_degenerate())
            continue;
        EXPECT_EQ(rf.total, rg.total);
        // t = mu(t') pulls each cluster form Q(t0, t1) back to Q(a t0 + b t1, c t0 + e t1).
        MPoly l0(2), l1(2);
        l0.add_term({1, 0}, a);
        l0.add_term({0, 1}, b);
        l1.add_term({1, 0}, c);
        l1.add_term({0, 1}, e);
        const std::vector<MPoly> mu{l0, l1};
        auto expected = divisor_forms(rf);
        for (auto& [m, form] : expected)
            form = form.substitute(mu).primitive();
        EXPECT_EQ(divisor_forms(rg), expected) << f.to_string();
    }
}

TEST(Solver, LinearChangeOfParameterAndScaling)
{
    Rng rng = make_rng(8080, 0);
    for (int trial = 0; trial < 15; ++trial) {
        auto fam = random_family(rng, 3, static_cast<int>(uniform_int(rng, 1, 2)), static_cast<int>(uniform_int(rng, 1, 3)));
        if (!fam)
            continue;
        const auto f = random_map(rng, 2, static_cast<int>(uniform_int(rng, 1, 4)));
        const auto base = inflection_divisor_n1(f, *fam);

        const auto moved = reparametrize_z(*fam, make_rational_map({T("2*t + 1"), T("t - 3")}));
        const auto r1 = inflection_divisor_n1(f, moved);
        EXPECT_EQ(r1.clusters, base.clusters);
        EXPECT_EQ(r1.degenerate, base.degenerate);

        const DivisorFamily scaled(BiForm(fam->form().poly() * Rat(3, 2), 3));
        std::vector<UniPoly> coords;
        for (const auto& c : f.affine_coords())
            coords.push_back(Rat(-2) * c);
        const auto r2 = inflection_divisor_n1(make_rational_map(coords, f.degree()), scaled);
        EXPECT_EQ(r2.clusters, base.clusters);
        EXPECT_EQ(r2.total, base.total);
    }
}

TEST(Solver, EverywhereInflectionaryForTangentFamilies)
{
    int checked = 0;
    for (std::uint64_t k = 0; k < 12; ++k) {
        Rng rng = make_rng(66, k);
        const auto f = random_map(rng, 2, static_cast<int>(uniform_int(rng, 2, 4)));
        std::optional<TangentLineFamily> tl;
        try {
            tl = tangent_line_family(f);
        } catch (const InvalidInput&) {
            continue;
        }
        ++checked;
        EXPECT_EQ(degeneracy_check(f, tl->family).verdict, Verdict::everywhere_inflectionary) << f.to_string();
    }
    EXPECT_GE(checked, 5);
}
