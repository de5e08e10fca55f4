#include "delsarte/verify.hpp"

#include <algorithm>
#include <set>

#include "delsarte/errors.hpp"
#include "delsarte/oracles.hpp"
#include "delsarte/polygon.hpp"
#include "delsarte/sparse_poly.hpp"

namespace delsarte {

std::vector<std::int64_t> oracle_parameters(const RepresentativeFamily& rep) {
    std::set<std::int64_t> ns{7, 9, 25};
    for (std::int64_t n = 1; n <= 60; ++n)
        if (n % rep.div == 0 || n % rep.fiber_div == 0) ns.insert(n);
    return {ns.begin(), ns.end()};
}

std::vector<VerifyLine> verify_lambda(const Catalog& cat) {
    std::vector<VerifyLine> out;
    for (const auto& rep : cat.representatives()) {
        for (const std::int64_t n : oracle_parameters(rep)) {
            const ExponentMatrix a = homogenize(terms_at(rep.terms, n));
            const LambdaResult fast = lefschetz_number(a);
            const std::size_t brute = oracles::brute_lambda(a);
            const std::size_t order = oracles::brute_group_order(a);
            out.push_back({"lambda", rep.id + " n=" + std::to_string(n), fast.lambda == brute && fast.group_order == order,
                           "|L| " + std::to_string(fast.group_order) + "/" + std::to_string(order) + ", lambda " +
                               std::to_string(fast.lambda) + "/" + std::to_string(brute)});
        }
    }
    return out;
}

IntegralPolygon row_hull(const FamilyRow& row) {
    const ExponentTerms terms = terms_at(row.terms, row.table_n);
    std::vector<LatticePoint> pts;
    for (const auto& m : terms.terms()) pts.push_back({m.x, m.y});
    return convex_hull(pts);
}

namespace {

VerifyLine pick_line(const std::string& name, const IntegralPolygon& p) {
    const LatticeCounts c = lattice_counts(p);
    const oracles::ScanCounts s = oracles::interior_scan(p);
    // Pick: 2A = 2i + b - 2
    const bool pick = Rational(2) * c.area == Rational(2 * c.interior + c.boundary - 2);
    return {"polygon", "pick " + name, pick && s.interior == c.interior && s.boundary == c.boundary,
            "i=" + std::to_string(c.interior) + " b=" + std::to_string(c.boundary) + " scan i=" + std::to_string(s.interior) +
                " b=" + std::to_string(s.boundary)};
}

std::string class_ids(const std::vector<CensusClass>& classes) {
    std::string s;
    for (const auto& c : classes) s += (s.empty() ? "" : ",") + c.id;
    return s;
}

}  // namespace

std::vector<VerifyLine> verify_polygon(const Catalog& cat) {
    std::vector<VerifyLine> out;
    const oracles::CensusReport c4 = oracles::class_census(4);
    const oracles::CensusReport c5 = oracles::class_census(5);
    std::string hist;
    for (const auto& [k, v] : c4.corner_histogram) hist += (hist.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    out.push_back({"polygon", "census bound 4", c4.total() == 16 && c4.at_most_four_corners() == 12,
                   std::to_string(c4.total()) + " classes, " + std::to_string(c4.at_most_four_corners()) +
                       " with <= 4 corners, corners " + hist});
    out.push_back({"polygon", "census bound 5", class_ids(c4.classes) == class_ids(c5.classes),
                   std::to_string(c5.total()) + " classes"});
    const bool labelled = std::none_of(c4.classes.begin(), c4.classes.end(), [](const CensusClass& c) { return c.id == "?"; });
    out.push_back({"polygon", "census labels", labelled, class_ids(c4.classes)});
    for (const auto& c : c4.classes) out.push_back(pick_line(c.id, c.representative));

    for (const auto& row : cat.rows()) {
        const IntegralPolygon hull = row_hull(row);
        std::string got;
        try {
            got = classify_one_interior(hull).id;
        } catch (const Error& e) {
            got = e.what();
        }
        out.push_back({"polygon", "hull " + row.id, got == row.polygon, hull.str() + " -> " + got});
        out.push_back(pick_line("row " + row.id, hull));
    }
    return out;
}

std::vector<VerifyLine> verify_lemma() {
    const auto got = oracles::prime_gap_scan(200);
    std::string s;
    for (auto n : got) s += (s.empty() ? "" : ",") + std::to_string(n);
    std::string m3;
    for (auto n : got)
        if (n % 3 == 0) m3 += (m3.empty() ? "" : ",") + std::to_string(n);
    return {{"lemma", "prime gap scan 200", got == std::vector<std::int64_t>{6, 12, 30}, "{" + s + "}"},
            {"lemma", "prime gap scan 200, 3|n", m3 == "6,12,30", "{" + m3 + "}"}};
}

std::vector<VerifyLine> verify_delta(const Catalog& cat) {
    std::vector<VerifyLine> out;
    for (const auto& rep : cat.representatives()) {
        for (const std::int64_t n : {rep.div, 2 * rep.div}) {
            const WeierstrassData w = rep.weierstrass_at(n);
            const SparsePoly delta = discriminant(w);
            const SparsePoly printed = eval_poly_expr(rep.delta, n);
            out.push_back({"delta", rep.id + " n=" + std::to_string(n), delta == printed,
                           delta == printed ? rep.delta : "computed " + delta.str()});
            if (rep.j_num) {
                const auto j = j_invariant(w);
                const bool ok = same_fraction(j, {eval_poly_expr(*rep.j_num, n), eval_poly_expr(*rep.j_den, n)});
                out.push_back({"delta", "j " + rep.id + " n=" + std::to_string(n), ok,
                               ok ? "(" + *rep.j_num + ")/(" + *rep.j_den + ")"
                                  : "computed (" + j.first.str() + ")/(" + j.second.str() + ")"});
            }
        }
    }
    return out;
}

std::vector<VerifyLine> run_verify(const Catalog& cat, const std::string& suite) {
    std::vector<VerifyLine> out;
    auto add = [&](std::vector<VerifyLine> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (suite == "lambda" || suite == "all") add(verify_lambda(cat));
    if (suite == "polygon" || suite == "all") add(verify_polygon(cat));
    if (suite == "lemma" || suite == "all") add(verify_lemma());
    if (suite == "delta" || suite == "all") add(verify_delta(cat));
    if (out.empty()) throw InvalidInput("unknown suite '" + suite + "'");
    return out;
}

}  // namespace delsarte
