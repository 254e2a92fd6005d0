#include "inflect/chow.hpp"
#include "inflect/jet.hpp"
#include "inflect/parse.hpp"
#include "inflect/random.hpp"

#include <gtest/gtest.h>

using namespace inflect;

namespace {

UniPoly T(const char* s) { return parse_unipoly(s); }

const std::vector<std::string> kTZ{"t0", "t1", "z0", "z1"};

BiForm tform(const char* s) { return parse_biform(s, {"t0", "t1"}, {"z0", "z1"}); }

UniPoly coeff(const ChartSection& s, int e0, int e1)
{
    auto it = s.coeffs.find({e0, e1});
    return it == s.coeffs.end() ? UniPoly{} : it->second;
}

RationalMap random_map(Rng& rng, int target, int d)
{
    for (;;) {
        std::vector<UniPoly> c;
        for (int i = 0; i <= target; ++i)
            c.push_back(random_poly(rng, static_cast<int>(uniform_int(rng, 0, d)), 6));
        c[static_cast<std::size_t>(uniform_int(rng, 0, target))] = random_poly(rng, d, 6);
        try {
            return make_rational_map(std::move(c), d);
        } catch (const InvalidInput&) {
        }
    }
}

RationalMap rational_normal_curve(int n)
{
    std::vector<UniPoly> c;
    for (int k = 0; k <= n; ++k)
        c.push_back(UniPoly::monomial(Rat(1), k));
    return make_rational_map(c);
}

} // namespace

TEST(Jet, Examples)
{
    const auto j = jet_section(tform("t0^2*z1 - t1^2*z0"), 1, Chart::affine);
    ASSERT_EQ(j.components.size(), 2u);
    EXPECT_EQ(coeff(j.components[0], 0, 1), T("t^2"));
    EXPECT_EQ(coeff(j.components[0], 1, 0), T("-1"));
    EXPECT_EQ(coeff(j.components[1], 0, 1), T("2*t"));
    EXPECT_EQ(coeff(j.components[1], 1, 0), UniPoly{});

    // (z1 - t z0)^2 from the conic against its tangent lines.
    const auto sq = jet_section(tform("(t1*z1 - t0*z0)^2"), 1, Chart::affine);
    EXPECT_EQ(coeff(sq.components[1], 2, 0), T("2*t"));
    EXPECT_EQ(coeff(sq.components[1], 1, 1), T("-2"));
    EXPECT_EQ(coeff(sq.components[1], 0, 2), UniPoly{});

    const auto j2 = jet_section(tform("t0^3*z1 - t1^3*z0"), 2, Chart::affine);
    ASSERT_EQ(j2.components.size(), 3u);
    EXPECT_EQ(coeff(j2.components[1], 0, 1), T("3*t^2"));
    EXPECT_EQ(coeff(j2.components[2], 0, 1), T("6*t"));
    EXPECT_EQ(j2.twist_degrees[0], (Bidegree{3, 1}));
    EXPECT_EQ(j2.twist_degrees[1], (Bidegree{1, 1}));
    EXPECT_EQ(j2.twist_degrees[2], (Bidegree{-1, 1}));
}

TEST(Jet, Errors)
{
    EXPECT_THROW(jet_section(tform("t0*z1 - t1*z0"), 0, Chart::affine), InvalidInput);
    EXPECT_THROW(jet_section(BiForm(MPoly(4), 2, Bidegree{1, 1}), 1, Chart::affine), InvalidInput);
}

TEST(Wronskian, Examples)
{
    EXPECT_EQ(wronskian({T("1"), T("t"), T("t^2")}), T("2"));
    EXPECT_EQ(wronskian({T("1"), T("t^2"), T("t^3")}), T("6*t^2"));
    EXPECT_EQ(wronskian({T("t^3"), T("1")}), T("-3*t^2"));
    EXPECT_TRUE(wronskian({T("t"), T("2*t")}).is_zero());
}

TEST(Wronskian, AlternatingAndMultilinear)
{
    Rng rng = make_rng(3, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<UniPoly> G;
        for (int i = 0; i < 3; ++i)
            G.push_back(random_poly(rng, static_cast<int>(uniform_int(rng, 0, 5)), 5));
        const UniPoly w = wronskian(G);
        auto swapped = G;
        std::swap(swapped[0], swapped[2]);
        EXPECT_EQ(wronskian(swapped), -w);
        auto sheared = G;
        const Rat lambda(uniform_int(rng, -4, 4));
        sheared[1] += lambda * G[0];
        EXPECT_EQ(wronskian(sheared), w);
        auto scaled = G;
        scaled[2] *= Rat(7, 3);
        EXPECT_EQ(wronskian(scaled), Rat(7, 3) * w);
        auto added = G;
        const UniPoly extra = random_poly(rng, 3, 5);
        added[0] = extra;
        auto sum = G;
        sum[0] += extra;
        EXPECT_EQ(wronskian(sum), w + wronskian(added));
        // A polynomial multiplier u scales the Wronskian by u^(n+1).
        const UniPoly u = random_poly(rng, 1, 5);
        auto mult = G;
        for (auto& g : mult)
            g *= u;
        EXPECT_EQ(wronskian(mult), u.pow(3) * w);
    }
}

TEST(WronskianInflection, RationalNormalCurves)
{
    for (int n = 1; n <= 5; ++n) {
        const auto r = wronskian_inflection(rational_normal_curve(n), hyperplane_family(n));
        EXPECT_FALSE(r.is_degenerate());
        EXPECT_TRUE(r.clusters.empty()) << n;
        EXPECT_EQ(r.total, 0);
        EXPECT_EQ(Int(r.total), rhs_total(1, 1, n, n, 0));
    }
}

TEST(WronskianInflection, CuspidalCubic)
{
    const auto r = wronskian_inflection(make_rational_map({T("1"), T("t^2"), T("t^3")}), hyperplane_family(2));
    ASSERT_EQ(r.clusters.size(), 2u);
    EXPECT_EQ(r.clusters[0].cluster, PointCluster::finite(T("t"), 2));
    EXPECT_EQ(r.clusters[1].cluster, PointCluster::infinity(1));
    EXPECT_EQ(r.total, 3);
    EXPECT_EQ(r.charts[0].discriminant, T("6*t^2"));
    EXPECT_EQ(r.charts[1].discriminant.low_order(), 1);
}

TEST(WronskianInflection, SquareMapAgainstPencil)
{
    const auto pencil = linear_series_family({parse_polynomial("x0", {"x0", "x1"}), parse_polynomial("x1", {"x0", "x1"})});
    const auto r = wronskian_inflection(make_rational_map({T("t^2"), T("1")}), pencil);
    EXPECT_EQ(r.charts[0].discriminant, T("-2*t"));
    ASSERT_EQ(r.clusters.size(), 2u);
    EXPECT_EQ(r.clusters[0].cluster, PointCluster::finite(T("t"), 1));
    EXPECT_EQ(r.clusters[1].cluster, PointCluster::infinity(1));
    EXPECT_EQ(r.total, 2);
}

TEST(WronskianInflection, DegenerateWhenImageInHyperplane)
{
    const auto r = wronskian_inflection(make_rational_map({T("t"), T("2*t"), T("1")}), hyperplane_family(2));
    EXPECT_TRUE(r.is_degenerate());
    EXPECT_EQ(*r.degenerate, "WRONSKIAN_ZERO");
    EXPECT_TRUE(r.clusters.empty());
}

TEST(WronskianInflection, PluckerTotalForRandomLinearSeries)
{
    int checked = 0;
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng = make_rng(404, k);
        const int m = static_cast<int>(uniform_int(rng, 1, 3));
        const int a = static_cast<int>(uniform_int(rng, 1, 2));
        const int n = static_cast<int>(uniform_int(rng, 1, 3));
        const int d = static_cast<int>(uniform_int(rng, 1, 4));
        std::vector<MPoly> gens;
        const auto monos = monomials_of_degree(static_cast<std::size_t>(m) + 1, 0, static_cast<std::size_t>(m) + 1, a);
        for (int i = 0; i <= n; ++i) {
            MPoly g(static_cast<std::size_t>(m) + 1);
            for (const auto& e : monos)
                g.add_term(e, Rat(uniform_int(rng, -3, 3)));
            gens.push_back(g);
        }
        std::optional<DivisorFamily> fam;
        try {
            fam = linear_series_family(gens);
        } catch (const InvalidInput&) {
            continue;
        }
        const auto f = random_map(rng, m, d);
        const auto r = wronskian_inflection(f, *fam);
        if (r.is_degenerate())
            continue;
        ++checked;
        EXPECT_EQ(Int(r.total), rhs_total(a, 1, n, d, 0)) << f.to_string() << " " << fam->to_string();
        for (const auto& c : r.clusters)
            EXPECT_GE(c.cluster.multiplicity, 1);
        ChartDivisor inf_chart = divisor_of(r.charts[1].discriminant);
        EXPECT_TRUE(charts_consistent(divisor_of(r.charts[0].discriminant), inf_chart));
    }
    EXPECT_GE(checked, 25);
}

TEST(WronskianInflection, ScalingChangesNothing)
{
    Rng rng = make_rng(8, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_map(rng, 2, static_cast<int>(uniform_int(rng, 2, 5)));
        std::vector<UniPoly> scaled;
        for (const auto& c : f.affine_coords())
            scaled.push_back(Rat(-5, 2) * c);
        const auto g = make_rational_map(scaled, f.degree());
        const auto a = wronskian_inflection(f, hyperplane_family(2));
        const auto b = wronskian_inflection(g, hyperplane_family(2));
        EXPECT_EQ(a.clusters, b.clusters);
        EXPECT_EQ(a.total, b.total);
    }
}
