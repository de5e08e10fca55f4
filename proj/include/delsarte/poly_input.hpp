#pragma once

#include <string>

#include "delsarte/lattice.hpp"

namespace delsarte {

/// Parses a four-term polynomial in t, X, Y with unit coefficients.
///
///   poly   := term ('+' term)*
///   term   := factor (['*'] factor)*
///   factor := ('t' | 'X' | 'Y') ['^' uint] | '1'
///
/// Errors (ParseError) report the 0-based column. Composite forms such as
/// (1+t^n)X^3 must be written out as two terms.
ExponentTerms parse_polynomial(const std::string& text);

/// Inverse of parse_polynomial for display, e.g. "1 + t^6 + X^3 + Y^2".
std::string format_polynomial(const ExponentTerms& terms);

}  // namespace delsarte
