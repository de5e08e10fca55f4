#include <gtest/gtest.h>

#include <algorithm>

#include "delsarte/errors.hpp"
#include "delsarte/lattice.hpp"

using namespace delsarte;

namespace {

const IntMat4 kExampleA = {{{0, 0, 63, 0}, {3, 0, 0, 60}, {3, 0, 60, 0}, {0, 2, 61, 0}}};

QZ q(std::int64_t n, std::int64_t d) { return qz_normalize(n, d); }

ExponentTerms terms(std::array<Monomial, 4> m) { return ExponentTerms(m); }

ExponentTerms family_1d(std::int64_t n) { return terms({{{0, 0, 0}, {0, 3, 0}, {n, 3, 0}, {0, 0, 2}}}); }

std::vector<IntVec4> sorted_rows(const ExponentMatrix& a) {
    std::vector<IntVec4> r(a.rows().begin(), a.rows().end());
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

TEST(ExponentTerms, RejectsNegativeAndDuplicate) {
    EXPECT_THROW(terms({{{0, 0, 0}, {-1, 3, 0}, {0, 0, 2}, {1, 1, 1}}}), InvalidInput);
    EXPECT_THROW(terms({{{0, 0, 0}, {0, 0, 0}, {0, 3, 0}, {0, 0, 2}}}), InvalidInput);
}

TEST(Homogenize, WorkedExample) {
    const ExponentMatrix a = homogenize(family_1d(60));
    EXPECT_EQ(a.degree(), 63);
    EXPECT_EQ(sorted_rows(a), sorted_rows(ExponentMatrix::from_rows(kExampleA)));
}

TEST(Homogenize, FamilyOneAAtSix) {
    const ExponentMatrix a = homogenize(terms({{{0, 0, 0}, {6, 0, 0}, {0, 3, 0}, {0, 0, 2}}}));
    EXPECT_EQ(a.degree(), 6);
    const IntMat4 expected = {{{0, 0, 6, 0}, {0, 0, 0, 6}, {3, 0, 3, 0}, {0, 2, 4, 0}}};
    EXPECT_EQ(a.rows(), expected);
    EXPECT_NE(a.det(), 0);
}

TEST(Homogenize, CollinearSupportIsSingular) {
    EXPECT_THROW(homogenize(terms({{{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 3, 0}}})), SingularMatrix);
}

TEST(ExponentMatrix, RejectsUnequalRowSums) {
    const IntMat4 m = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}};
    EXPECT_THROW(ExponentMatrix::from_rows(m), InvalidInput);
}

TEST(Generators, WorkedExample) {
    const auto g = lattice_generators(ExponentMatrix::from_rows(kExampleA));
    EXPECT_EQ(g[1], (QZVec4{{q(1, 2), q(59, 60), q(1, 60), q(1, 2)}}));
    EXPECT_EQ(g[2], (QZVec4{{q(0, 1), q(59, 60), q(1, 60), q(0, 1)}}));
    EXPECT_EQ(g[0], (QZVec4{{q(2, 3), q(59, 60), q(7, 20), q(0, 1)}}));
}

TEST(Generators, IntegralInverseGivesZero) {
    const IntMat4 id = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    for (const auto& g : lattice_generators(ExponentMatrix::from_rows(id))) EXPECT_TRUE(g.is_zero());
}

TEST(EnumerateGroup, WorkedExampleSize) {
    EXPECT_EQ(enumerate_group(lattice_generators(ExponentMatrix::from_rows(kExampleA))).size(), 360u);
}

TEST(EnumerateGroup, SingleGenerator) {
    const LatticeGroup g = enumerate_group(std::vector<QZVec4>{{{q(1, 2), q(1, 2), q(0, 1), q(0, 1)}}});
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.elements[0], QZVec4{});
    EXPECT_EQ(g.elements[1], (QZVec4{{q(1, 2), q(1, 2), q(0, 1), q(0, 1)}}));
}

TEST(EnumerateGroup, FamilyOneBAtFour) {
    const auto a = homogenize(terms({{{0, 0, 0}, {4, 1, 0}, {0, 3, 0}, {0, 0, 2}}}));
    EXPECT_EQ(enumerate_group(lattice_generators(a)).size(), 24u);
}

TEST(EnumerateGroup, SortedAndClosed) {
    const LatticeGroup g = enumerate_group(lattice_generators(homogenize(family_1d(12))));
    EXPECT_TRUE(std::is_sorted(g.elements.begin(), g.elements.end()));
    for (const auto& a : g.elements)
        for (const auto& b : g.elements) EXPECT_TRUE(std::binary_search(g.elements.begin(), g.elements.end(), a + b));
}

TEST(InLambda, ZeroCoordinate) { EXPECT_FALSE(in_lambda(QZVec4{{q(2, 3), q(0, 1), q(1, 3), q(0, 1)}})); }

TEST(InLambda, CosetOfV2IsExcluded) {
    for (std::int64_t i = 1; i < 60; ++i)
        EXPECT_FALSE(in_lambda(QZVec4{{q(1, 2), q(-i, 60), q(i, 60), q(1, 2)}})) << "i = " << i;
}

TEST(InLambda, WorkedExampleMember) { EXPECT_TRUE(in_lambda(QZVec4{{q(1, 6), q(59, 60), q(23, 60), q(1, 2)}})); }

TEST(InLambda, MultisetOnly) {
    const QZVec4 v{{q(1, 6), q(59, 60), q(23, 60), q(1, 2)}};
    const QZVec4 w{{q(1, 2), q(23, 60), q(1, 6), q(59, 60)}};
    EXPECT_EQ(in_lambda(v), in_lambda(w));
}

TEST(Lefschetz, WorkedExample) {
    const LambdaResult r = lefschetz_number(homogenize(family_1d(60)));
    EXPECT_EQ(r.group_order, 360u);
    EXPECT_EQ(r.lambda, 98u);
}

TEST(Lefschetz, FamilyOneA) {
    const LambdaResult r = lefschetz_number(homogenize(terms({{{0, 0, 0}, {360, 0, 0}, {0, 3, 0}, {0, 0, 2}}})));
    EXPECT_EQ(r.group_order, 2160u);
    EXPECT_EQ(r.lambda, 648u);
}

TEST(Lefschetz, InadmissibleParameter) {
    // Closed form 2n - 22 would give -10 here; the value comes from the brute-force scan.
    const LambdaResult r = lefschetz_number(homogenize(family_1d(6)));
    EXPECT_EQ(r.group_order, 36u);
    EXPECT_EQ(r.lambda, 2u);
}

TEST(Lefschetz, WorkerCountDoesNotMatter) {
    const auto a = homogenize(family_1d(60));
    const LambdaResult one = lefschetz_number(a, 1);
    for (unsigned w : {2u, 3u, 7u, 64u}) {
        const LambdaResult r = lefschetz_number(a, w);
        EXPECT_EQ(r.lambda, one.lambda);
        EXPECT_EQ(r.group_order, one.group_order);
    }
}
