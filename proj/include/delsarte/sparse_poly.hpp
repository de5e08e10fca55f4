#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "delsarte/rational.hpp"

namespace delsarte {

/// Exact univariate polynomial in t with only nonzero coefficients stored.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(const Rational& c);  // NOLINT(implicit): constant polynomial
    static SparsePoly monomial(const Rational& c, std::int64_t exponent);
    static SparsePoly t() { return monomial(Rational(1), 1); }

    const std::map<std::int64_t, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(std::int64_t exponent) const;
    std::int64_t degree() const;  // -1 for the zero polynomial

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o) { return *this += -o; }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly pow(std::uint64_t e) const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// e.g. "-432 - 864*t^6 - 432*t^12"
    std::string str() const;

private:
    std::map<std::int64_t, Rational> terms_;
};

/// Evaluates a polynomial expression in t whose exponents may be affine in n.
///
/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor | '/' uint)*
///   factor := atom ['^' uint]
///   atom   := uint | 't' ['^' exp] | '(' expr ')'
///   exp    := uint | affine | '(' affine ')'     affine in n, e.g. n, 3n, 2n+1, n/3
/// Exponents must evaluate to nonnegative integers at the given n.
SparsePoly eval_poly_expr(const std::string& text, std::int64_t n);

}  // namespace delsarte
