#include "inflect/curve.hpp"
#include "inflect/family.hpp"
#include "inflect/parse.hpp"
#include "inflect/pullback.hpp"
#include "inflect/random.hpp"
#include "inflect/solver.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace inflect;

namespace {

const std::vector<std::string> kTZ{"t0", "t1", "z0", "z1"};

UniPoly T(const char* s) { return parse_unipoly(s); }

MPoly tz(const char* s) { return parse_polynomial(s, kTZ); }

} // namespace

TEST(RationalMap, Homogenization)
{
    const auto f = make_rational_map({T("t^2"), T("1")});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.target_dim(), 1);
    const std::vector<std::string> names{"t0", "t1"};
    const auto h = f.homogeneous_coords();
    EXPECT_EQ(h[0].to_string(names), "t0^2");
    EXPECT_EQ(h[1].to_string(names), "t1^2");

    const auto conic = make_rational_map({T("1"), T("t"), T("t^2")});
    EXPECT_EQ(conic.degree(), 2);
    const auto hc = conic.homogeneous_coords();
    EXPECT_EQ(hc[0].to_string(names), "t1^2");
    EXPECT_EQ(hc[1].to_string(names), "t0*t1");
    EXPECT_EQ(hc[2].to_string(names), "t0^2");
}

TEST(RationalMap, Rejections)
{
    try {
        make_rational_map({T("t"), T("t^2 - t")});
        FAIL() << "common factor accepted";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("common factor t"), std::string::npos) << e.what();
    }
    EXPECT_THROW(make_rational_map({T("0"), T("0")}), InvalidInput);
    EXPECT_THROW(make_rational_map({T("t^2"), T("1")}, 1), InvalidInput);
    EXPECT_THROW(make_rational_map({T("t^2"), T("1")}, 3), InvalidInput);
    EXPECT_THROW(make_rational_map({T("2"), T("3")}), InvalidInput);
    EXPECT_THROW(make_rational_map({T("t")}), InvalidInput);
    EXPECT_EQ(make_rational_map({T("t^2"), T("1")}, 2).degree(), 2);
}

TEST(RationalMap, ChartCoordinates)
{
    const auto f = make_rational_map({T("t^2 + 1"), T("t")});
    EXPECT_EQ(f.chart_coord(0, Chart::infinity), T("t^2 + 1"));
    EXPECT_EQ(f.chart_coord(1, Chart::infinity), T("t"));
    const auto g = make_rational_map({T("t^3 + 2"), T("t")});
    EXPECT_EQ(g.chart_coord(0, Chart::infinity), T("2*t^3 + 1"));
    EXPECT_EQ(g.chart_coord(1, Chart::infinity), T("t^2"));
}

TEST(Pullback, PointFamilyAlongSquare)
{
    const auto f = make_rational_map({T("t^2"), T("1")});
    const BiForm S = pullback_section(f, point_family());
    EXPECT_EQ(S.poly(), tz("t0^2*z1 - t1^2*z0"));
    EXPECT_EQ(S.bidegree(), (Bidegree{2, 1}));
}

TEST(Pullback, PencilThroughPointOfConic)
{
    const auto f = make_rational_map({T("t"), T("t^2"), T("1")});
    const auto fam = parse_family("z0*x1 - z1*x0", 3, 2);
    const BiForm S = pullback_section(f, fam);
    EXPECT_EQ(S.poly(), tz("z0*t0^2 - z1*t0*t1"));
    EXPECT_EQ(content_in_t(S, Chart::affine).content, T("t"));
}

TEST(Pullback, ConicAgainstItsTangentLinesIsASquare)
{
    const auto f = make_rational_map({T("1"), T("t"), T("t^2")});
    const BiForm S = pullback_section(f, tangent_line_family(f).family);
    const MPoly root = tz("z0*t1 - z1*t0");
    EXPECT_TRUE(S.poly() == root * root || S.poly() == -(root * root));
}

TEST(Pullback, ArityMismatchAndImageInMember)
{
    const auto f = make_rational_map({T("t^2"), T("1")});
    EXPECT_THROW(pullback_section(f, hyperplane_family(2)), InvalidInput);

    // x0 = 0 is in every member of z0 x0 x1 + z1 x0 x2.
    const auto fam = parse_family("z0*x0*x1 + z1*x0*x2", 3, 2);
    const auto line = make_rational_map({T("0"), T("t"), T("1")});
    EXPECT_TRUE(pullback_poly(line, fam).is_zero());
    try {
        pullback_section(line, fam);
        FAIL() << "degenerate pullback returned";
    } catch (const Degenerate& e) {
        EXPECT_EQ(e.reason(), "IMAGE_IN_FIBER");
    }
}

TEST(Pullback, MultiplicativeInTheFamily)
{
    Rng rng = make_rng(11, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f1 = DivisorFamily(BiForm(random_biform_poly(rng, 3, 2, 1, 1, 4), 3));
        const auto f2 = DivisorFamily(BiForm(random_biform_poly(rng, 3, 2, 1, 2, 4), 3));
        const DivisorFamily prod(BiForm(f1.form().poly() * f2.form().poly(), 3));
        const auto f = make_rational_map({random_poly(rng, 3, 5), random_poly(rng, 2, 5), random_poly(rng, 1, 5)});
        EXPECT_EQ(pullback_poly(f, prod), pullback_poly(f, f1) * pullback_poly(f, f2));
    }
}

TEST(Hyperelliptic, GenusAndValidation)
{
    EXPECT_EQ(HyperellipticCurve(T("t^5 - t")).genus(), 2);
    EXPECT_EQ(HyperellipticCurve(T("t^6 - 1")).genus(), 2);
    EXPECT_EQ(HyperellipticCurve(T("t^7 - t")).genus(), 3);
    EXPECT_EQ(HyperellipticCurve(T("t^8 - 1")).genus(), 3);
    EXPECT_EQ(HyperellipticCurve(T("t^3 - t")).canonical_degree(), 0);
    EXPECT_THROW(HyperellipticCurve(T("t^2*(t - 1)")), InvalidInput);
    EXPECT_THROW(HyperellipticCurve(T("3")), InvalidInput);
}

TEST(Hyperelliptic, WeierstrassPointsOfGenusTwo)
{
    const auto id = make_rational_map({T("t"), T("1")});
    const auto even = hyperelliptic_ramification(HyperellipticCurve(T("t^6 - 1")), id);
    ASSERT_EQ(even.clusters.size(), 1u);
    EXPECT_EQ(even.clusters[0].base.defining_poly, T("t^6 - 1"));
    EXPECT_EQ(even.clusters[0].base.multiplicity, 1);
    EXPECT_EQ(even.clusters[0].sheets, 1);
    EXPECT_EQ(even.total, 6);
    EXPECT_TRUE(even.matched);

    const auto odd = hyperelliptic_ramification(HyperellipticCurve(T("t^5 - t")), id);
    ASSERT_EQ(odd.clusters.size(), 2u);
    EXPECT_EQ(odd.clusters[0].base.point_count(), 5);
    EXPECT_TRUE(odd.clusters[1].base.at_infinity);
    EXPECT_EQ(odd.clusters[1].base.multiplicity, 1);
    EXPECT_EQ(odd.total, 6);
    EXPECT_TRUE(odd.matched);
}

TEST(Hyperelliptic, ComposedWithSquare)
{
    const auto sq = make_rational_map({T("t^2"), T("1")});
    const auto r = hyperelliptic_ramification(HyperellipticCurve(T("t^6 - 3*t + 1")), sq);
    EXPECT_EQ(r.total, 10);
    EXPECT_EQ(r.expected, 10);
    // x = 0 is not a branch point: two points, each with e = 2.
    bool saw_zero = false;
    for (const auto& c : r.clusters)
        if (!c.base.at_infinity && c.base.defining_poly == T("t")) {
            saw_zero = true;
            EXPECT_EQ(c.sheets, 2);
            EXPECT_EQ(c.base.multiplicity, 1);
        }
    EXPECT_TRUE(saw_zero);
}

TEST(Hyperelliptic, RiemannHurwitzTotalForRandomData)
{
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng = make_rng(2024, k);
        const int deg_h = static_cast<int>(uniform_int(rng, 3, 8));
        UniPoly h;
        do
            h = random_poly(rng, deg_h, 6);
        while (!is_squarefree(h));
        const int e = static_cast<int>(uniform_int(rng, 1, 4));
        std::optional<RationalMap> phi;
        while (!phi) {
            try {
                phi = make_rational_map({random_poly(rng, e, 5), random_poly(rng, static_cast<int>(uniform_int(rng, 0, e)), 5)}, e);
            } catch (const InvalidInput&) {
            }
        }
        const HyperellipticCurve C(h);
        const auto r = hyperelliptic_ramification(C, *phi);
        EXPECT_EQ(r.total, 4L * e + 2L * C.genus() - 2) << h << " " << phi->to_string();
        EXPECT_TRUE(r.matched);
        for (const auto& c : r.clusters)
            EXPECT_GE(c.base.multiplicity, 1);
    }
}

TEST(Hyperelliptic, AgreesWithDirectSolverInGenusZero)
{
    // y^2 = x is parametrized by x = s^2; phi o x is then a map of the s-line.
    const HyperellipticCurve C(T("t"));
    for (std::uint64_t k = 0; k < 12; ++k) {
        Rng rng = make_rng(77, k);
        const int e = static_cast<int>(uniform_int(rng, 1, 3));
        std::optional<RationalMap> phi;
        while (!phi) {
            try {
                phi = make_rational_map({random_poly(rng, e, 4), random_poly(rng, static_cast<int>(uniform_int(rng, 0, e)), 4)}, e);
            } catch (const InvalidInput&) {
            }
        }
        const UniPoly s2 = T("t^2");
        const auto composed = make_rational_map(
            {phi->affine_coords()[0].compose(s2), phi->affine_coords()[1].compose(s2)}, 2 * e);
        const auto direct = inflection_divisor_n1(composed, point_family());
        const auto hyper = hyperelliptic_ramification(C, *phi);
        EXPECT_EQ(direct.total, hyper.total);
        std::map<int, long> a, b;
        for (const auto& c : direct.clusters)
            a[c.cluster.multiplicity] += c.cluster.point_count();
        for (const auto& c : hyper.clusters)
            b[c.base.multiplicity] += static_cast<long>(c.sheets) * c.base.point_count();
        EXPECT_EQ(a, b) << phi->to_string();
    }
}
