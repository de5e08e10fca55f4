#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "delsarte/qz.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

using IntVec4 = std::array<std::int64_t, 4>;
using IntMat4 = std::array<IntVec4, 4>;

/// 4x4 matrix of exact rationals, row-major.
struct RatMat4 {
    std::array<std::array<Rational, 4>, 4> entries{};

    static RatMat4 identity();
    static RatMat4 from_int(const IntMat4& m);

    const std::array<Rational, 4>& operator[](std::size_t r) const { return entries[r]; }
    std::array<Rational, 4>& operator[](std::size_t r) { return entries[r]; }

    friend RatMat4 operator*(const RatMat4& a, const RatMat4& b);
    friend bool operator==(const RatMat4&, const RatMat4&) = default;

    std::string str() const;
};

/// Determinant by cofactor expansion (exact).
BigInt determinant(const IntMat4& m);

/// Exact inverse by Gauss-Jordan elimination over Q.
/// Throws SingularMatrix when det(m) = 0.
RatMat4 mat4_inverse(const IntMat4& m);

/// Row vector times matrix, each entry reduced mod Z.
QZVec4 row_vec_apply(const IntVec4& v, const RatMat4& m);

}  // namespace delsarte
