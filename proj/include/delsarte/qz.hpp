#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "delsarte/rational.hpp"

namespace delsarte {

/// An element of Q/Z, stored as its lift num/den in [0, 1) with gcd(num, den) = 1.
///
/// The denominator is the additive order of the element. Arithmetic is
/// overflow-checked 64-bit; results that would not fit throw ConsistencyError.
class QZ {
public:
    constexpr QZ() = default;

    /// num/den reduced mod Z; den may be negative but not zero.
    static QZ normalize(std::int64_t num, std::int64_t den);
    static QZ from_rational(const Rational& r);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    std::int64_t order() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    /// The lift <a> in [0, 1) as an exact rational.
    Rational lift() const { return Rational(num_, den_); }

    QZ operator-() const;
    friend QZ operator+(const QZ& a, const QZ& b);
    friend QZ operator-(const QZ& a, const QZ& b) { return a + (-b); }
    /// Integer scaling t·a.
    friend QZ operator*(std::int64_t t, const QZ& a);

    friend bool operator==(const QZ&, const QZ&) = default;
    friend auto operator<=>(const QZ&, const QZ&) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QZ& a) { return os << a.str(); }

private:
    constexpr QZ(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline QZ qz_normalize(std::int64_t num, std::int64_t den) { return QZ::normalize(num, den); }
inline QZ qz_add(const QZ& a, const QZ& b) { return a + b; }
inline QZ qz_scale(std::int64_t t, const QZ& a) { return t * a; }
inline std::int64_t qz_order(const QZ& a) { return a.order(); }
inline Rational qz_lift(const QZ& a) { return a.lift(); }

/// Element of (Q/Z)^4.
struct QZVec4 {
    std::array<QZ, 4> coords{};

    const QZ& operator[](std::size_t i) const { return coords[i]; }
    QZ& operator[](std::size_t i) { return coords[i]; }

    QZVec4 operator-() const;
    friend QZVec4 operator+(const QZVec4& a, const QZVec4& b);
    friend QZVec4 operator*(std::int64_t t, const QZVec4& v);

    bool is_zero() const;
    /// lcm of the coordinate orders.
    std::int64_t order() const;

    friend bool operator==(const QZVec4&, const QZVec4&) = default;
    friend auto operator<=>(const QZVec4&, const QZVec4&) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QZVec4& v) { return os << v.str(); }
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace delsarte

template <>
struct std::hash<delsarte::QZVec4> {
    std::size_t operator()(const delsarte::QZVec4& v) const noexcept {
        std::size_t h = 0;
        for (const auto& c : v.coords) {
            const auto mix = static_cast<std::size_t>(c.numerator()) * 1000003u + static_cast<std::size_t>(c.denominator());
            h ^= mix + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
