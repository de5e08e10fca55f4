#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "delsarte/catalog.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/oracles.hpp"
#include "delsarte/poly_input.hpp"
#include "delsarte/polygon.hpp"
#include "delsarte/report_json.hpp"
#include "delsarte/verify.hpp"

using namespace delsarte;

namespace {

const Catalog& bundled() {
    static const Catalog cat = load_catalog(default_catalog_path());
    return cat;
}

std::vector<LatticePoint> xy(const ExponentTerms& t) {
    std::vector<LatticePoint> out;
    for (const auto& m : t.terms()) out.push_back({m.x, m.y});
    return out;
}

}  // namespace

TEST(Pipeline, TypedPolynomialMatchesCatalogFamily) {
    const ExponentTerms typed = parse_polynomial("1 + X^3 + t^60*X^3 + Y^2");
    EXPECT_EQ(typed, family_terms(bundled(), "1d", 60));
    const LambdaResult r = lefschetz_number(homogenize(typed));
    EXPECT_EQ(r.lambda, 98u);
    EXPECT_EQ(classify_one_interior(convex_hull(xy(typed))).id, "w1");
}

TEST(Pipeline, RowAndRepresentativeAgree) {
    for (const auto& row : bundled().rows()) {
        const auto [rep, q] = representative_of(bundled(), row.id);
        const RankReport r = row.eval_n ? representative_rank(bundled(), rep, *row.eval_n) : family_rank(bundled(), row.id, row.table_n);
        EXPECT_EQ(r.representative, rep) << row.id;
        EXPECT_EQ(r.n, row.representative_n()) << row.id;
        EXPECT_EQ(r.rank, row.rank) << row.id;
    }
}

TEST(Pipeline, RepresentativeChecksAtTwoParameters) {
    for (const auto& rep : bundled().representatives()) {
        for (const std::int64_t n : {rep.div, 2 * rep.div}) {
            const RankReport r = representative_rank(bundled(), rep.id, n);
            EXPECT_EQ(r.lambda, rep.lambda.at(n)) << rep.id << " n=" << n;
            EXPECT_EQ(r.rank, rep.rank) << rep.id << " n=" << n;
            EXPECT_EQ(r.h2, r.euler - 2);
        }
    }
}

TEST(Pipeline, JsonRoundTripForEveryRepresentative) {
    for (const auto& rep : bundled().representatives()) {
        const RankReport r = representative_rank(bundled(), rep.id, rep.div);
        const std::string text = nlohmann::json(r).dump(2);
        EXPECT_EQ(nlohmann::json::parse(text).get<RankReport>(), r);
        EXPECT_EQ(nlohmann::json(r).dump(2), text);
    }
}

TEST(Pipeline, RowHullsAgreeWithScan) {
    for (const auto& row : bundled().rows()) {
        const IntegralPolygon h = row_hull(row);
        const auto c = lattice_counts(h);
        const auto s = oracles::interior_scan(h);
        EXPECT_EQ(c.interior, 1) << row.id;
        EXPECT_EQ(s.interior, c.interior) << row.id;
        EXPECT_EQ(s.boundary, c.boundary) << row.id;
        EXPECT_EQ(classify_one_interior(h).id, row.polygon) << row.id;
    }
}

TEST(Pipeline, CatalogEnvironmentOverride) {
    const std::string path = ::testing::TempDir() + "/override_catalog.txt";
    {
        std::ofstream out(path);
        out << "# empty\n";
    }
    ::setenv("DELSARTE_CATALOG", path.c_str(), 1);
    EXPECT_EQ(default_catalog_path(), path);
    EXPECT_THROW(load_catalog(default_catalog_path()), InvalidInput);
    ::unsetenv("DELSARTE_CATALOG");
    EXPECT_NE(default_catalog_path(), path);
}
