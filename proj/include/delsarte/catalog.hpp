#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delsarte/lattice.hpp"
#include "delsarte/rational.hpp"
#include "delsarte/surface.hpp"

namespace delsarte {

/// constant + slope * n
struct AffineInN {
    std::int64_t constant = 0;
    std::int64_t slope = 0;

    std::int64_t at(std::int64_t n) const { return constant + slope * n; }

    /// Accepts "5", "n", "3n", "-72+2n", "2n-72", "0+1n".
    static AffineInN parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const AffineInN&, const AffineInN&) = default;
};

struct TermSpec {
    AffineInN t;
    std::int64_t x = 0;
    std::int64_t y = 0;
};

using TermSpecs = std::array<TermSpec, 4>;

ExponentTerms terms_at(const TermSpecs& spec, std::int64_t n);

struct FamilyRow {
    std::string id;
    TermSpecs terms;
    std::string polygon;  // class label, w1..w12
    std::int64_t table_n = 0;
    std::int64_t rank = 0;  // maximal rank listed in the table
    std::string rep;
    Rational nmap{1};
    /// Representative parameter used to reproduce this row when nmap * table_n is not admissible.
    std::optional<std::int64_t> eval_n;
    std::size_t line = 0;

    /// Parameter at which the representative is evaluated for this row.
    std::int64_t representative_n() const;
};

struct FiberSpec {
    std::string kind;  // "I", "I*", or a parameterless symbol
    AffineInN index;   // only for I and I*
    AffineInN count;

    std::pair<KodairaType, std::int64_t> at(std::int64_t n) const;
};

struct RepresentativeFamily {
    std::string id;
    TermSpecs terms;
    std::int64_t div = 1;        // lambda closed form and maximal rank hold when div | n
    std::int64_t fiber_div = 1;  // fibre configuration holds when fiber_div | n
    AffineInN lambda;
    std::vector<FiberSpec> fibers;
    std::string a, b;            // Weierstrass coefficients, expressions in t
    std::string delta;           // printed closed form of the discriminant
    std::optional<std::string> j_num, j_den;
    std::int64_t rank = 0;
    std::size_t line = 0;

    FiberConfig fibers_at(std::int64_t n) const;
    WeierstrassData weierstrass_at(std::int64_t n) const;
};

class Catalog {
public:
    const std::vector<FamilyRow>& rows() const noexcept { return rows_; }
    const std::vector<RepresentativeFamily>& representatives() const noexcept { return reps_; }

    const FamilyRow& row(const std::string& id) const;
    const RepresentativeFamily& representative(const std::string& id) const;
    bool has_row(const std::string& id) const;
    bool has_representative(const std::string& id) const;

    /// Parses without validation. Errors carry the 1-based line number.
    static Catalog parse(const std::string& text);

    /// Per-row and per-representative invariants; with `complete`, also the 42/11 counts.
    void validate(bool complete = true) const;

private:
    std::vector<FamilyRow> rows_;
    std::vector<RepresentativeFamily> reps_;
};

/// Reads, parses and fully validates a catalog document.
Catalog load_catalog(const std::filesystem::path& path);

/// Path of the catalog shipped with the project (DELSARTE_CATALOG overrides).
std::filesystem::path default_catalog_path();

ExponentTerms family_terms(const Catalog& cat, const std::string& id, std::int64_t n);

/// (representative id, q) with row(n) corresponding to representative(q n).
std::pair<std::string, Rational> representative_of(const Catalog& cat, const std::string& id);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct RankReport {
    std::string family;          // requested id (row or representative)
    std::int64_t family_n = 0;
    std::string representative;
    std::int64_t n = 0;          // representative parameter
    std::int64_t group_order = 0;
    std::int64_t lambda = 0;
    std::int64_t euler = 0;
    std::int64_t h2 = 0;
    std::int64_t rho_triv = 0;
    std::int64_t rank = 0;
    std::vector<Check> checks;

    bool all_checks_pass() const;

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

/// Full pipeline for a representative. Throws PreconditionError unless div | n.
RankReport representative_rank(const Catalog& cat, const std::string& rep_id, std::int64_t n);

/// Row id or representative id at parameter n, routed through the representative mapping.
RankReport family_rank(const Catalog& cat, const std::string& id, std::int64_t n);

struct TableEntry {
    const FamilyRow* row = nullptr;
    std::string rep;
    std::int64_t rep_n = 0;
    std::optional<std::int64_t> computed_rank;
    std::string error;
    std::optional<LambdaResult> own_lambda;  // the row's own exponent matrix at table_n
    bool match = false;
};

std::vector<TableEntry> reproduce_table(const Catalog& cat);

}  // namespace delsarte
