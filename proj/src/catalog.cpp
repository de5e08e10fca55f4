#include "delsarte/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "delsarte/errors.hpp"
#include "delsarte/polygon.hpp"

#ifndef DELSARTE_DEFAULT_CATALOG
#define DELSARTE_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace delsarte {

namespace {

constexpr std::size_t kTableRows = 42;
constexpr std::size_t kRepresentatives = 11;

std::int64_t parse_int(const std::string& s, std::size_t line) {
    static const std::regex re(R"(-?\d+)");
    if (!std::regex_match(s, re)) throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'", line);
    return std::stoll(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

TermSpecs parse_terms(const std::string& value, std::size_t line) {
    const auto parts = split(value, ';');
    if (parts.size() != 4) throw ParseError("line " + std::to_string(line) + ": terms needs exactly four entries", line);
    TermSpecs out;
    static const std::regex re(R"(\(t:([^,]+),x:(\d+),y:(\d+)\))");
    for (std::size_t i = 0; i < 4; ++i) {
        std::smatch m;
        if (!std::regex_match(parts[i], m, re))
            throw ParseError("line " + std::to_string(line) + ": malformed term '" + parts[i] + "'", line);
        try {
            out[i].t = AffineInN::parse(m[1].str());
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
        }
        out[i].x = std::stoll(m[2].str());
        out[i].y = std::stoll(m[3].str());
    }
    return out;
}

FiberSpec parse_fiber(const std::string& entry, std::size_t line) {
    const auto colon = entry.rfind(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(line) + ": fibre entry needs TYPE:COUNT", line);
    const std::string type = entry.substr(0, colon);
    FiberSpec f;
    f.count = AffineInN::parse(entry.substr(colon + 1));
    static const std::regex indexed(R"(I(\*?)\(([^)]+)\))");
    static const std::regex literal(R"(I(\d+)(\*?))");
    std::smatch m;
    if (std::regex_match(type, m, indexed)) {
        f.kind = m[1].str().empty() ? "I" : "I*";
        f.index = AffineInN::parse(m[2].str());
    } else if (std::regex_match(type, m, literal)) {
        f.kind = m[2].str().empty() ? "I" : "I*";
        f.index = AffineInN{std::stoll(m[1].str()), 0};
    } else {
        KodairaType::parse(type);  // throws on unknown symbols
        f.kind = type;
    }
    return f;
}

}  // namespace

AffineInN AffineInN::parse(const std::string& text) {
    std::string s;
    for (unsigned char c : text)
        if (!std::isspace(c)) s += static_cast<char>(c);
    const auto bad = [&] { return ParseError("not an affine expression in n: '" + text + "'", 0); };
    if (s.empty()) throw bad();
    AffineInN a;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw bad();
        }
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        const bool has_digits = pos > start;
        const std::int64_t value = has_digits ? std::stoll(s.substr(start, pos - start)) : 1;
        if (pos < s.size() && s[pos] == 'n') {
            ++pos;
            a.slope += sign * value;
        } else if (has_digits) {
            a.constant += sign * value;
        } else {
            throw bad();
        }
    }
    return a;
}

std::string AffineInN::str() const {
    if (slope == 0) return std::to_string(constant);
    std::string s = slope == 1 ? "n" : (slope == -1 ? "-n" : std::to_string(slope) + "n");
    if (constant > 0) s += "+" + std::to_string(constant);
    if (constant < 0) s += std::to_string(constant);
    return s;
}

ExponentTerms terms_at(const TermSpecs& spec, std::int64_t n) {
    std::array<Monomial, 4> m;
    for (std::size_t i = 0; i < 4; ++i) m[i] = {spec[i].t.at(n), spec[i].x, spec[i].y};
    return ExponentTerms(m);
}

std::int64_t FamilyRow::representative_n() const {
    if (eval_n) return *eval_n;
    const Rational q = nmap * Rational(table_n);
    if (!q.is_integer()) throw ConsistencyError("row " + id + ": nmap * table_n is not an integer");
    return to_int64(q.numerator());
}

std::pair<KodairaType, std::int64_t> FiberSpec::at(std::int64_t n) const {
    const std::int64_t c = count.at(n);
    if (kind == "I") return {KodairaType::I(index.at(n)), c};
    if (kind == "I*") return {KodairaType::I_star(index.at(n)), c};
    return {KodairaType::parse(kind), c};
}

FiberConfig RepresentativeFamily::fibers_at(std::int64_t n) const {
    FiberConfig cfg;
    for (const auto& f : fibers) cfg.entries.push_back(f.at(n));
    return cfg;
}

WeierstrassData RepresentativeFamily::weierstrass_at(std::int64_t n) const {
    return {eval_poly_expr(a, n), eval_poly_expr(b, n)};
}

const FamilyRow& Catalog::row(const std::string& id) const {
    for (const auto& r : rows_)
        if (r.id == id) return r;
    throw InvalidInput("unknown family id '" + id + "'");
}

const RepresentativeFamily& Catalog::representative(const std::string& id) const {
    for (const auto& r : reps_)
        if (r.id == id) return r;
    throw InvalidInput("unknown representative id '" + id + "'");
}

bool Catalog::has_row(const std::string& id) const {
    return std::any_of(rows_.begin(), rows_.end(), [&](const FamilyRow& r) { return r.id == id; });
}

bool Catalog::has_representative(const std::string& id) const {
    return std::any_of(reps_.begin(), reps_.end(), [&](const RepresentativeFamily& r) { return r.id == id; });
}

Catalog Catalog::parse(const std::string& text) {
    // Join continuation lines (leading whitespace) onto their record; strip comments.
    std::vector<std::pair<std::size_t, std::string>> records;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        const auto hash = raw.find('#');
        const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        if (std::isspace(static_cast<unsigned char>(body.front()))) {
            if (records.empty()) throw ParseError("line " + std::to_string(lineno) + ": continuation without a record", lineno);
            records.back().second += " " + body;
        } else {
            records.emplace_back(lineno, body);
        }
    }

    Catalog cat;
    for (const auto& [line, rec] : records) {
        std::istringstream fields(rec);
        std::string kind;
        fields >> kind;
        std::map<std::string, std::string> kv;
        for (std::string tok; fields >> tok;) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError("line " + std::to_string(line) + ": expected key=value, got '" + tok + "'", line);
            if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
                throw ParseError("line " + std::to_string(line) + ": duplicate field '" + tok.substr(0, eq) + "'", line);
        }
        auto take = [&, line = line](const std::string& key) {
            const auto it = kv.find(key);
            if (it == kv.end()) throw ParseError("line " + std::to_string(line) + ": missing field '" + key + "'", line);
            std::string v = it->second;
            kv.erase(it);
            return v;
        };
        auto take_opt = [&](const std::string& key) -> std::optional<std::string> {
            const auto it = kv.find(key);
            if (it == kv.end()) return std::nullopt;
            std::string v = it->second;
            kv.erase(it);
            return v;
        };

        try {
            if (kind == "family") {
                FamilyRow r;
                r.line = line;
                r.id = take("id");
                r.terms = parse_terms(take("terms"), line);
                r.polygon = take("polygon");
                r.table_n = parse_int(take("table_n"), line);
                r.rank = parse_int(take("rank"), line);
                r.rep = take("rep");
                r.nmap = Rational::parse(take("nmap"));
                if (auto e = take_opt("eval_n")) r.eval_n = parse_int(*e, line);
                cat.rows_.push_back(std::move(r));
            } else if (kind == "representative") {
                RepresentativeFamily r;
                r.line = line;
                r.id = take("id");
                r.terms = parse_terms(take("terms"), line);
                r.div = parse_int(take("div"), line);
                r.fiber_div = parse_int(take("fiber_div"), line);
                r.lambda = AffineInN::parse(take("lambda"));
                for (const auto& e : split(take("fibers"), ',')) r.fibers.push_back(parse_fiber(e, line));
                r.a = take("a");
                r.b = take("b");
                r.delta = take("delta");
                r.j_num = take_opt("jnum");
                r.j_den = take_opt("jden");
                if (r.j_num.has_value() != r.j_den.has_value())
                    throw ParseError("line " + std::to_string(line) + ": jnum and jden go together", line);
                r.rank = parse_int(take("rank"), line);
                cat.reps_.push_back(std::move(r));
            } else {
                throw ParseError("line " + std::to_string(line) + ": unknown record type '" + kind + "'", line);
            }
        } catch (const ParseError& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw ParseError("line " + std::to_string(line) + ": " + what, line);
        }
        if (!kv.empty()) throw ParseError("line " + std::to_string(line) + ": unknown field '" + kv.begin()->first + "'", line);
    }
    return cat;
}

void Catalog::validate(bool complete) const {
    std::set<std::string> ids;
    for (const auto& rep : reps_) {
        if (!ids.insert("rep:" + rep.id).second) throw InvalidInput("duplicate representative '" + rep.id + "'");
        if (rep.div <= 0 || rep.fiber_div <= 0 || rep.div % rep.fiber_div != 0)
            throw InvalidInput("representative " + rep.id + ": fiber_div must divide div");
        try {
            homogenize(terms_at(rep.terms, rep.div));
            eval_poly_expr(rep.a, rep.div);
            eval_poly_expr(rep.b, rep.div);
            eval_poly_expr(rep.delta, rep.div);
            rep.fibers_at(rep.div);
        } catch (const Error& e) {
            throw InvalidInput("representative " + rep.id + " (line " + std::to_string(rep.line) + "): " + e.what());
        }
    }
    const auto& canon = canonical_classes();
    for (const auto& row : rows_) {
        const std::string where = "row " + row.id + " (line " + std::to_string(row.line) + "): ";
        if (!ids.insert("row:" + row.id).second) throw InvalidInput("duplicate row '" + row.id + "'");
        if (!has_representative(row.rep)) throw InvalidInput(where + "unknown representative '" + row.rep + "'");
        if (row.table_n <= 0) throw InvalidInput(where + "table_n must be positive");
        if (std::none_of(canon.begin(), canon.end(), [&](const PolygonClassId& c) { return c.id == row.polygon; }))
            throw InvalidInput(where + "unknown polygon class '" + row.polygon + "'");
        try {
            const ExponentTerms terms = terms_at(row.terms, row.table_n);
            homogenize(terms);
            std::vector<LatticePoint> support;
            for (const auto& m : terms.terms()) support.push_back({m.x, m.y});
            const IntegralPolygon hull = convex_hull(support);
            const auto& cls = classify_one_interior(hull);
            if (cls.id != row.polygon)
                throw InvalidInput("hull classifies as " + cls.id + ", catalog says " + row.polygon);
        } catch (const Error& e) {
            throw InvalidInput(where + e.what());
        }
        const Rational q = row.nmap * Rational(row.table_n);
        if (q.sign() <= 0 || !q.is_integer()) throw InvalidInput(where + "nmap * table_n must be a positive integer");
        const std::int64_t n_eff = row.representative_n();
        if (n_eff % representative(row.rep).div != 0)
            throw InvalidInput(where + "representative parameter " + std::to_string(n_eff) + " is not divisible by " +
                               std::to_string(representative(row.rep).div));
    }
    if (complete) {
        if (rows_.size() != kTableRows)
            throw InvalidInput("catalog has " + std::to_string(rows_.size()) + " rows, expected " + std::to_string(kTableRows));
        if (reps_.size() != kRepresentatives)
            throw InvalidInput("catalog has " + std::to_string(reps_.size()) + " representatives, expected " +
                               std::to_string(kRepresentatives));
        for (const auto& rep : reps_)
            if (std::none_of(rows_.begin(), rows_.end(), [&](const FamilyRow& r) { return r.rep == rep.id && r.id == rep.id; }))
                throw InvalidInput("representative " + rep.id + " has no table row of its own");
    }
}

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open catalog '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Catalog cat = Catalog::parse(buf.str());
    cat.validate(true);
    return cat;
}

std::filesystem::path default_catalog_path() {
    if (const char* env = std::getenv("DELSARTE_CATALOG"); env && *env) return env;
    return DELSARTE_DEFAULT_CATALOG;
}

ExponentTerms family_terms(const Catalog& cat, const std::string& id, std::int64_t n) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (cat.has_row(id)) return terms_at(cat.row(id).terms, n);
    return terms_at(cat.representative(id).terms, n);
}

std::pair<std::string, Rational> representative_of(const Catalog& cat, const std::string& id) {
    const FamilyRow& r = cat.row(id);
    return {r.rep, r.nmap};
}

bool RankReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

RankReport representative_rank(const Catalog& cat, const std::string& rep_id, std::int64_t n) {
    const RepresentativeFamily& rep = cat.representative(rep_id);
    if (n < 1) throw InvalidInput("n must be positive");
    if (n % rep.div != 0)
        throw PreconditionError("representative " + rep_id + " requires " + std::to_string(rep.div) + " | n (n = " +
                                std::to_string(n) + ")");

    RankReport r;
    r.family = rep_id;
    r.family_n = n;
    r.representative = rep_id;
    r.n = n;

    const LambdaResult lam = lefschetz_number(homogenize(terms_at(rep.terms, n)));
    r.group_order = static_cast<std::int64_t>(lam.group_order);
    r.lambda = static_cast<std::int64_t>(lam.lambda);

    const FiberConfig cfg = rep.fibers_at(n);
    r.euler = euler_number(cfg);
    r.h2 = second_betti(cfg);
    r.rho_triv = rho_triv(cfg);
    r.rank = mordell_weil_rank(r.h2, r.lambda, r.rho_triv);

    r.checks.push_back({"divisibility", true, std::to_string(rep.div) + " | " + std::to_string(n)});
    const std::int64_t expected_lambda = rep.lambda.at(n);
    r.checks.push_back({"lambda_formula", expected_lambda == r.lambda,
                        "lambda = " + std::to_string(r.lambda) + ", " + rep.lambda.str() + " = " + std::to_string(expected_lambda)});

    const WeierstrassData w = rep.weierstrass_at(n);
    const SparsePoly delta = discriminant(w);
    const SparsePoly printed = eval_poly_expr(rep.delta, n);
    r.checks.push_back({"delta_identity", delta == printed, rep.delta});
    if (rep.j_num) {
        const auto j = j_invariant(w);
        const std::pair<SparsePoly, SparsePoly> expected{eval_poly_expr(*rep.j_num, n), eval_poly_expr(*rep.j_den, n)};
        r.checks.push_back({"j_identity", same_fraction(j, expected), "(" + *rep.j_num + ")/(" + *rep.j_den + ")"});
    }
    r.checks.push_back({"maximal_rank", r.rank == rep.rank, "expected " + std::to_string(rep.rank)});
    return r;
}

RankReport family_rank(const Catalog& cat, const std::string& id, std::int64_t n) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (!cat.has_row(id)) return representative_rank(cat, id, n);
    const auto [rep, q] = representative_of(cat, id);
    const Rational m = q * Rational(n);
    if (!m.is_integer())
        throw PreconditionError("row " + id + " maps to " + rep + " at " + m.str() + " * ..., which is not an integer parameter");
    RankReport r = representative_rank(cat, rep, to_int64(m.numerator()));
    r.family = id;
    r.family_n = n;
    return r;
}

std::vector<TableEntry> reproduce_table(const Catalog& cat) {
    std::map<std::pair<std::string, std::int64_t>, RankReport> cache;
    std::vector<TableEntry> out;
    for (const auto& row : cat.rows()) {
        TableEntry e;
        e.row = &row;
        e.rep = row.rep;
        try {
            e.rep_n = row.representative_n();
            const auto key = std::pair{row.rep, e.rep_n};
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, representative_rank(cat, row.rep, e.rep_n)).first;
            e.computed_rank = it->second.rank;
            e.match = *e.computed_rank == row.rank;
        } catch (const Error& err) {
            e.error = err.what();
        }
        try {
            e.own_lambda = lefschetz_number(homogenize(terms_at(row.terms, row.table_n)));
        } catch (const Error&) {
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace delsarte
