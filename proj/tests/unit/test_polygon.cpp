#include <gtest/gtest.h>

#include <algorithm>

#include "delsarte/errors.hpp"
#include "delsarte/polygon.hpp"

using namespace delsarte;

namespace {

IntegralPolygon hull(std::vector<LatticePoint> pts) { return convex_hull(pts); }

}  // namespace

TEST(ConvexHull, DropsEdgePoint) {
    EXPECT_EQ(hull({{0, 0}, {2, 0}, {3, 0}, {0, 2}}).str(), "(0,0) (3,0) (0,2)");
}

TEST(ConvexHull, Triangle) { EXPECT_EQ(hull({{0, 1}, {1, 0}, {0, 0}}).str(), "(0,0) (1,0) (0,1)"); }

TEST(ConvexHull, CollinearIsDegenerate) { EXPECT_THROW(hull({{0, 0}, {1, 0}, {2, 0}}), DegenerateSupport); }

TEST(IntegralPolygon, ValidatesOrientation) {
    EXPECT_THROW(IntegralPolygon({{0, 0}, {0, 2}, {3, 0}}), InvalidInput);
    EXPECT_THROW(IntegralPolygon({{3, 0}, {0, 2}, {0, 0}}), InvalidInput);
    EXPECT_THROW(IntegralPolygon({{0, 0}, {1, 0}}), DegenerateSupport);
}

TEST(LatticeCounts, Examples) {
    const LatticeCounts a = lattice_counts(hull({{0, 0}, {3, 0}, {0, 2}}));
    EXPECT_EQ(a.interior, 1);
    EXPECT_EQ(a.boundary, 6);
    EXPECT_EQ(a.area, Rational(3));
    const LatticeCounts b = lattice_counts(hull({{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(b.interior, 0);
    EXPECT_EQ(b.boundary, 3);
    EXPECT_EQ(b.area, Rational(1, 2));
    const LatticeCounts c = lattice_counts(hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    EXPECT_EQ(c.interior, 1);
    EXPECT_EQ(c.boundary, 8);
    EXPECT_EQ(c.area, Rational(4));
}

TEST(Genus, Examples) {
    const GenusResult a = genus_of_support({{0, 0}, {0, 0}, {3, 0}, {0, 2}}, true);
    EXPECT_EQ(a.genus_bound, 1);
    EXPECT_TRUE(a.exact);
    const GenusResult b = genus_of_support({{0, 0}, {1, 0}, {0, 1}}, false);
    EXPECT_EQ(b.genus_bound, 0);
    EXPECT_FALSE(b.exact);
    EXPECT_EQ(genus_of_support({{0, 0}, {4, 0}, {0, 4}, {2, 2}}, true).genus_bound, 3);
}

TEST(DefaultPosition, Examples) {
    EXPECT_EQ(to_default_position(hull({{1, 1}, {4, 1}, {1, 3}})).str(), "(0,0) (3,0) (0,2)");
    EXPECT_EQ(to_default_position(hull({{-1, 0}, {2, 0}, {-1, 2}})).str(), "(0,0) (3,0) (0,2)");
    const IntegralPolygon p = hull({{0, 0}, {3, 0}, {0, 2}});
    EXPECT_EQ(to_default_position(p), p);
}

TEST(Equivalence, Reflexive) {
    const IntegralPolygon p = hull({{0, 0}, {3, 0}, {0, 2}});
    const auto m = integral_equivalence(p, p);
    ASSERT_TRUE(m);
    for (const auto& v : p.vertices()) EXPECT_EQ((*m)(v), v);
}

TEST(Equivalence, Shear) {
    const IntegralPolygon p = hull({{0, 0}, {3, 0}, {0, 2}});
    const IntegralPolygon q = hull({{0, 0}, {3, 0}, {2, 2}});
    const auto m = integral_equivalence(p, q);
    ASSERT_TRUE(m);
    EXPECT_EQ(std::abs(m->det()), 1);
    std::vector<LatticePoint> image;
    for (const auto& v : p.vertices()) image.push_back((*m)(v));
    EXPECT_EQ(hull(image), q);
}

TEST(Equivalence, DifferentAreas) {
    EXPECT_FALSE(integral_equivalence(hull({{0, 0}, {3, 0}, {0, 2}}), hull({{0, 0}, {3, 0}, {0, 3}})));
}

TEST(AffineMap, ComposeAndInverse) {
    const UnimodularAffineMap a{{{{1, 1}, {0, 1}}}, {2, -1}};
    const UnimodularAffineMap b{{{{0, -1}, {1, 0}}}, {0, 3}};
    const LatticePoint p{5, 7};
    EXPECT_EQ(a.compose(b)(p), a(b(p)));
    EXPECT_EQ(a.inverse()(a(p)), p);
    EXPECT_EQ(a.compose(a.inverse()), UnimodularAffineMap::identity());
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify_one_interior(hull({{0, 0}, {3, 0}, {0, 2}})).id, "w1");
    EXPECT_EQ(classify_one_interior(hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}})).id, "w12");
    EXPECT_EQ(classify_one_interior(hull({{0, 0}, {3, 0}, {2, 1}, {0, 2}})).id, "w8");
    EXPECT_THROW(classify_one_interior(hull({{0, 0}, {1, 0}, {0, 1}})), InvalidInput);
}

TEST(CanonicalClasses, PairwiseInequivalentWithOneInteriorPoint) {
    const auto& cls = canonical_classes();
    ASSERT_EQ(cls.size(), 16u);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        EXPECT_EQ(lattice_counts(cls[i].canonical).interior, 1) << cls[i].id;
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            EXPECT_FALSE(integral_equivalence(cls[i].canonical, cls[j].canonical)) << cls[i].id << " ~ " << cls[j].id;
    }
    const auto small = std::count_if(cls.begin(), cls.end(), [](const PolygonClassId& c) { return c.canonical.corners() <= 4; });
    EXPECT_EQ(small, 12);
}

TEST(Census, BoundFour) {
    const auto cls = enumerate_one_interior_classes(4);
    ASSERT_EQ(cls.size(), 16u);
    std::map<std::size_t, int> hist;
    for (const auto& c : cls) {
        EXPECT_NE(c.id, "?");
        EXPECT_EQ(to_default_position(c.representative), c.representative);
        ++hist[c.representative.corners()];
    }
    EXPECT_EQ(hist, (std::map<std::size_t, int>{{3, 5}, {4, 7}, {5, 3}, {6, 1}}));
}

TEST(Census, BoundBelowFourRejected) { EXPECT_THROW(enumerate_one_interior_classes(3), InvalidInput); }

TEST(TransformSupport, ReflectionExample) {
    const std::vector<SupportPoint> in{{{0, 0}, 0}, {{1, 0}, 1}, {{4, 0}, 2}, {{0, 2}, 3}};
    const UnimodularAffineMap m{{{{-1, -2}, {0, 1}}}, {4, 0}};
    const std::vector<SupportPoint> expected{{{4, 0}, 0}, {{3, 0}, 1}, {{0, 0}, 2}, {{0, 2}, 3}};
    EXPECT_EQ(transform_support(in, m), expected);
}

TEST(TransformSupport, Identity) {
    const std::vector<SupportPoint> in{{{0, 0}, 0}, {{3, 0}, 1}, {{0, 2}, 2}};
    EXPECT_EQ(transform_support(in, UnimodularAffineMap::identity()), in);
}

TEST(TransformSupport, Shear) {
    const std::vector<SupportPoint> in{{{0, 0}, 0}, {{3, 0}, 1}, {{0, 2}, 2}};
    std::vector<LatticePoint> pts;
    for (const auto& s : transform_support(in, {{{{1, 1}, {0, 1}}}, {0, 0}})) pts.push_back(s.point);
    EXPECT_EQ(hull(pts).str(), "(0,0) (3,0) (2,2)");
}

TEST(TransformSupport, RejectsNonUnimodular) {
    EXPECT_THROW(transform_support({{{0, 0}, 0}}, {{{{2, 0}, {0, 1}}}, {0, 0}}), InvalidInput);
}
