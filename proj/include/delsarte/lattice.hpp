#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "delsarte/matrix.hpp"
#include "delsarte/qz.hpp"

namespace delsarte {

/// One monomial t^t X^x Y^y of a four-term polynomial.
struct Monomial {
    std::int64_t t = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// The exponent triples of f = sum_{i<4} t^a X^b Y^c; exactly four, pairwise distinct, nonnegative.
class ExponentTerms {
public:
    explicit ExponentTerms(const std::array<Monomial, 4>& terms);

    const std::array<Monomial, 4>& terms() const noexcept { return terms_; }
    const Monomial& operator[](std::size_t i) const { return terms_[i]; }

    friend bool operator==(const ExponentTerms&, const ExponentTerms&) = default;

    std::string str() const;

private:
    std::array<Monomial, 4> terms_;
};

/// Homogenized exponent matrix A_f. Columns are (X, Y, Z, T); each row sums to the degree.
class ExponentMatrix {
public:
    /// Validates nonnegativity, equal row sums and det != 0 (SingularMatrix otherwise).
    static ExponentMatrix from_rows(const IntMat4& rows);

    const IntMat4& rows() const noexcept { return rows_; }
    std::int64_t degree() const noexcept { return degree_; }
    const BigInt& det() const noexcept { return det_; }

    std::string str() const;

private:
    ExponentMatrix(const IntMat4& rows, std::int64_t degree, BigInt det)
        : rows_(rows), degree_(degree), det_(std::move(det)) {}

    IntMat4 rows_;
    std::int64_t degree_;
    BigInt det_;
};

/// The finite subgroup L of (Q/Z)^4 and its defining generators.
struct LatticeGroup {
    std::array<QZVec4, 3> generators;
    std::vector<QZVec4> elements;  // sorted, deduplicated

    std::size_t size() const noexcept { return elements.size(); }
};

ExponentMatrix homogenize(const ExponentTerms& terms);

/// (e_i - e_4) A^-1 for i = 1, 2, 3, reduced mod Z.
std::array<QZVec4, 3> lattice_generators(const ExponentMatrix& a);

LatticeGroup enumerate_group(const std::array<QZVec4, 3>& gens);
LatticeGroup enumerate_group(const std::vector<QZVec4>& gens);

/// Membership in Lambda: every coordinate nonzero and some unit t mod N with sum <t a_i> != 2.
bool in_lambda(const QZVec4& v);

struct LambdaResult {
    std::size_t group_order = 0;
    std::size_t lambda = 0;
};

/// Lefschetz number #Lambda. `workers` = 0 reads DELSARTE_THREADS (default: hardware concurrency).
LambdaResult lefschetz_number(const ExponentMatrix& a, unsigned workers = 0);

/// Worker count used when none is requested explicitly.
unsigned default_workers();

}  // namespace delsarte
