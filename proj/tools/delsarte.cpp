// delsarte: Lefschetz numbers, Mordell-Weil ranks and Newton polygon classes
// for four-term elliptic curves over k(t).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "delsarte/catalog.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/oracles.hpp"
#include "delsarte/poly_input.hpp"
#include "delsarte/polygon.hpp"
#include "delsarte/report_json.hpp"
#include "delsarte/verify.hpp"

using namespace delsarte;
using nlohmann::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConsistency = 4;

struct Options {
    bool json = false;
    std::string catalog;
};

Catalog open_catalog(const Options& o) { return load_catalog(o.catalog.empty() ? default_catalog_path() : std::filesystem::path(o.catalog)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<LatticePoint> xy_support(const ExponentTerms& terms) {
    std::vector<LatticePoint> pts;
    for (const auto& m : terms.terms()) pts.push_back({m.x, m.y});
    return pts;
}

IntegralPolygon hull_of(const std::string& poly) { return convex_hull(xy_support(parse_polynomial(poly))); }

int cmd_lambda(const Options& o, const std::string& poly, const std::string& family, std::int64_t n) {
    ExponentTerms terms = [&] {
        if (!poly.empty()) return parse_polynomial(poly);
        if (family.empty() || n == 0) throw InvalidInput("lambda needs --poly, or --family with --n");
        return family_terms(open_catalog(o), family, n);
    }();
    const ExponentMatrix a = homogenize(terms);
    const LambdaResult r = lefschetz_number(a);
    if (o.json) {
        emit({{"terms", format_polynomial(terms)}, {"matrix", a.rows()}, {"group_order", r.group_order}, {"lambda", r.lambda}});
        return 0;
    }
    std::cout << "f       " << format_polynomial(terms) << "\n"
              << "A_f     " << a.str() << "\n"
              << "|L|     " << r.group_order << "\n"
              << "lambda  " << r.lambda << "\n";
    return 0;
}

void print_report(const RankReport& r) {
    std::cout << "family          " << r.family << " (n = " << r.family_n << ")\n"
              << "representative  " << r.representative << " (n = " << r.n << ")\n"
              << "|L|             " << r.group_order << "\n"
              << "lambda          " << r.lambda << "\n"
              << "euler           " << r.euler << "\n"
              << "h2              " << r.h2 << "\n"
              << "rho_triv        " << r.rho_triv << "\n"
              << "checks\n";
    for (const auto& c : r.checks)
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << std::left << std::setw(16) << c.name << c.detail << "\n";
    std::cout << "rank = " << r.rank << "\n";
}

int cmd_rank(const Options& o, const std::string& family, const std::string& rep, std::int64_t n) {
    if (family.empty() == rep.empty()) throw InvalidInput("rank needs exactly one of --family and --rep");
    const Catalog cat = open_catalog(o);
    const RankReport r = family.empty() ? representative_rank(cat, rep, n) : family_rank(cat, family, n);
    if (o.json) emit(r);
    else print_report(r);
    return r.all_checks_pass() ? 0 : kExitConsistency;
}

int cmd_table(const Options& o) {
    const Catalog cat = open_catalog(o);
    const auto entries = reproduce_table(cat);
    std::size_t matches = 0;
    for (const auto& e : entries) matches += e.match;
    if (o.json) {
        json rows = json::array();
        for (const auto& e : entries) {
            json j = {{"id", e.row->id},      {"polygon", e.row->polygon}, {"table_n", e.row->table_n},
                      {"rep", e.rep},         {"rep_n", e.rep_n},          {"expected_rank", e.row->rank},
                      {"match", e.match}};
            j["rank"] = e.computed_rank ? json(*e.computed_rank) : json(nullptr);
            if (e.own_lambda) j["lambda"] = e.own_lambda->lambda;
            if (!e.error.empty()) j["error"] = e.error;
            rows.push_back(j);
        }
        emit({{"rows", rows}, {"matches", matches}, {"total", entries.size()}});
    } else {
        std::cout << std::left << std::setw(5) << "row" << std::setw(8) << "polygon" << std::right << std::setw(6) << "n"
                  << std::setw(9) << "lambda" << "  " << std::left << std::setw(5) << "rep" << std::right << std::setw(6)
                  << "rep_n" << std::setw(9) << "expected" << std::setw(9) << "computed"
                  << "  status\n";
        for (const auto& e : entries) {
            std::cout << std::left << std::setw(5) << e.row->id << std::setw(8) << e.row->polygon << std::right << std::setw(6)
                      << e.row->table_n << std::setw(9) << (e.own_lambda ? std::to_string(e.own_lambda->lambda) : "-")
                      << "  " << std::left << std::setw(5) << e.rep << std::right << std::setw(6) << e.rep_n
                      << std::setw(9) << e.row->rank << std::setw(9)
                      << (e.computed_rank ? std::to_string(*e.computed_rank) : "-") << "  "
                      << (e.match ? "ok" : "MISMATCH " + e.error) << "\n";
        }
        std::cout << matches << "/" << entries.size() << " rows match\n";
    }
    return matches == entries.size() ? 0 : kExitConsistency;
}

int cmd_genus(const Options& o, const std::string& poly) {
    const ExponentTerms terms = parse_polynomial(poly);
    bool nondegenerate = true;
    try {
        homogenize(terms);
    } catch (const SingularMatrix&) {
        nondegenerate = false;
    }
    const IntegralPolygon hull = convex_hull(xy_support(terms));
    const LatticeCounts c = lattice_counts(hull);
    const GenusResult g = genus_of_support(xy_support(terms), nondegenerate);
    std::string cls = "-";
    if (c.interior == 1) cls = classify_one_interior(hull).id;
    if (o.json) {
        emit({{"polygon", hull}, {"interior", c.interior}, {"boundary", c.boundary}, {"area", c.area.str()},
              {"genus", g.genus_bound}, {"exact", g.exact}, {"class", cls}});
        return 0;
    }
    std::cout << "polygon   " << hull.str() << "\n"
              << "interior  " << c.interior << "\n"
              << "boundary  " << c.boundary << "\n"
              << "area      " << c.area.str() << "\n"
              << "genus     " << g.genus_bound << (g.exact ? " (exact)" : " (upper bound)") << "\n"
              << "class     " << cls << "\n";
    return 0;
}

int cmd_classify(const Options& o, const std::string& poly) {
    const IntegralPolygon hull = hull_of(poly);
    const PolygonClassId& c = classify_one_interior(hull);
    const auto witness = integral_equivalence(hull, c.canonical);
    if (o.json) {
        emit({{"polygon", hull}, {"class", c.id}, {"canonical", c.canonical}, {"map", *witness}});
        return 0;
    }
    std::cout << "polygon    " << hull.str() << "\n"
              << "class      " << c.id << "\n"
              << "canonical  " << c.canonical.str() << "\n"
              << "map        " << witness->str() << "\n";
    return 0;
}

int cmd_equiv(const Options& o, const std::vector<std::string>& polys) {
    if (polys.size() != 2) throw InvalidInput("equiv needs --poly twice");
    const IntegralPolygon p = hull_of(polys[0]);
    const IntegralPolygon q = hull_of(polys[1]);
    const auto m = integral_equivalence(p, q);
    if (o.json) {
        emit({{"first", p}, {"second", q}, {"equivalent", m.has_value()}, {"map", m ? json(*m) : json(nullptr)}});
        return 0;
    }
    std::cout << "first   " << p.str() << "\n"
              << "second  " << q.str() << "\n";
    if (m) std::cout << "equivalent via " << m->str() << "\n";
    else std::cout << "not equivalent\n";
    return 0;
}

int cmd_census(const Options& o, std::int64_t bound) {
    if (bound != 4 && bound != 5) throw InvalidInput("census bound must be 4 or 5");
    const oracles::CensusReport r = oracles::class_census(bound);
    const bool labelled = std::none_of(r.classes.begin(), r.classes.end(), [](const CensusClass& c) { return c.id == "?"; });
    const bool ok = r.total() == 16 && r.at_most_four_corners() == 12 && r.scan_agrees && labelled;
    if (o.json) {
        json classes = json::array();
        for (const auto& c : r.classes)
            classes.push_back({{"id", c.id}, {"corners", c.representative.corners()}, {"polygon", c.representative}, {"found", c.found}});
        json hist = json::object();
        for (const auto& [k, v] : r.corner_histogram) hist[std::to_string(k)] = v;
        emit({{"bound", bound}, {"classes", classes}, {"corner_histogram", hist}, {"total", r.total()},
              {"at_most_four_corners", r.at_most_four_corners()}, {"scan_agrees", r.scan_agrees}});
    } else {
        for (const auto& c : r.classes)
            std::cout << std::left << std::setw(5) << c.id << c.representative.corners() << " corners  " << std::setw(42)
                      << c.representative.str() << " found " << c.found << "\n";
        std::cout << "corners";
        for (const auto& [k, v] : r.corner_histogram) std::cout << "  " << k << ":" << v;
        std::cout << "\ntotal " << r.total() << ", with at most 4 corners " << r.at_most_four_corners() << ", scan "
                  << (r.scan_agrees ? "agrees" : "DISAGREES") << "\n";
    }
    return ok ? 0 : kExitConsistency;
}

int cmd_verify(const Options& o, const std::string& suite) {
    const Catalog cat = open_catalog(o);
    const auto lines = run_verify(cat, suite);
    std::size_t passed = 0;
    for (const auto& l : lines) passed += l.pass;
    if (o.json) {
        json arr = json::array();
        for (const auto& l : lines) arr.push_back({{"suite", l.suite}, {"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
        emit({{"checks", arr}, {"passed", passed}, {"total", lines.size()}});
    } else {
        for (const auto& l : lines)
            std::cout << (l.pass ? "PASS " : "FAIL ") << std::left << std::setw(8) << l.suite << std::setw(24) << l.name
                      << l.detail << "\n";
        std::cout << passed << "/" << lines.size() << " passed\n";
    }
    return passed == lines.size() ? 0 : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lefschetz numbers and Mordell-Weil ranks of four-term elliptic curves over k(t)"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_option("--catalog", opt.catalog, "Family catalog (default: bundled data/catalog.txt)");

    std::string poly, family, rep, suite = "all";
    std::vector<std::string> polys;
    std::int64_t n = 0, bound = 4;

    auto* lam = app.add_subcommand("lambda", "Order of L and the Lefschetz number");
    lam->add_option("--poly", poly, "Four-term polynomial, e.g. \"1 + t^6 + X^3 + Y^2\"");
    lam->add_option("--family", family, "Catalog row or representative id");
    lam->add_option("--n", n, "Family parameter")->check(CLI::PositiveNumber);

    auto* rank = app.add_subcommand("rank", "Full rank report for a catalog family");
    rank->add_option("--family", family, "Catalog row id (routed through its representative)");
    rank->add_option("--rep", rep, "Representative id");
    rank->add_option("--n", n, "Family parameter")->required()->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "Reproduce the 42-row rank table");

    auto* genus = app.add_subcommand("genus", "Newton polygon and genus of a four-term curve");
    genus->add_option("--poly", poly)->required();

    auto* classify = app.add_subcommand("classify", "Class of a Newton polygon with one interior point");
    classify->add_option("--poly", poly)->required();

    auto* equiv = app.add_subcommand("equiv", "Integral equivalence of two Newton polygons");
    equiv->add_option("--poly", polys)->required()->expected(2)->take_all();

    auto* census = app.add_subcommand("census", "Classes of lattice polygons with one interior point");
    census->add_option("--bound", bound, "Grid bound, 4 or 5");

    auto* verify = app.add_subcommand("verify", "Compare brute-force oracles with the main paths");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"lambda", "polygon", "lemma", "delta", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*lam) return cmd_lambda(opt, poly, family, n);
        if (*rank) return cmd_rank(opt, family, rep, n);
        if (*table) return cmd_table(opt);
        if (*genus) return cmd_genus(opt, poly);
        if (*classify) return cmd_classify(opt, poly);
        if (*equiv) return cmd_equiv(opt, polys);
        if (*census) return cmd_census(opt, bound);
        if (*verify) return cmd_verify(opt, suite);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.category()) {
        case Error::Category::invalid_input: return kExitInvalid;
        case Error::Category::precondition: return kExitPrecondition;
        case Error::Category::consistency: return kExitConsistency;
        }
    }
    return kExitInvalid;
}
