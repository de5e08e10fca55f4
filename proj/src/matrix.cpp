#include "delsarte/matrix.hpp"

#include <utility>

#include "delsarte/errors.hpp"

namespace delsarte {

RatMat4 RatMat4::identity() {
    RatMat4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i][i] = Rational(1);
    return r;
}

RatMat4 RatMat4::from_int(const IntMat4& m) {
    RatMat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i][j] = Rational(m[i][j]);
    return r;
}

RatMat4 operator*(const RatMat4& a, const RatMat4& b) {
    RatMat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rational s;
            for (std::size_t k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

std::string RatMat4::str() const {
    std::string s;
    for (const auto& row : entries) {
        s += "[";
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) s += ", ";
            s += row[j].str();
        }
        s += "]\n";
    }
    return s;
}

namespace {

BigInt det3(const IntMat4& m, std::size_t skip_row, std::size_t skip_col) {
    std::array<std::array<BigInt, 3>, 3> s;
    std::size_t r = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == skip_col) continue;
            s[r][c++] = BigInt(std::to_string(m[i][j]));
        }
        ++r;
    }
    return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
           s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
           s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

}  // namespace

BigInt determinant(const IntMat4& m) {
    BigInt d = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        const BigInt term = BigInt(std::to_string(m[0][j])) * det3(m, 0, j);
        if (j % 2 == 0) d += term;
        else d -= term;
    }
    return d;
}

RatMat4 mat4_inverse(const IntMat4& m) {
    RatMat4 a = RatMat4::from_int(m);
    RatMat4 inv = RatMat4::identity();
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && a[pivot][col].is_zero()) ++pivot;
        if (pivot == 4) throw SingularMatrix("exponent matrix is singular (det = 0)");
        std::swap(a.entries[col], a.entries[pivot]);
        std::swap(inv.entries[col], inv.entries[pivot]);

        const Rational p = a[col][col];
        for (std::size_t j = 0; j < 4; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 4; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

QZVec4 row_vec_apply(const IntVec4& v, const RatMat4& m) {
    QZVec4 out;
    for (std::size_t j = 0; j < 4; ++j) {
        Rational s;
        for (std::size_t i = 0; i < 4; ++i)
            if (v[i] != 0) s += Rational(v[i]) * m[i][j];
        out[j] = QZ::from_rational(s);
    }
    return out;
}

}  // namespace delsarte
