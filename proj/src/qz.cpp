#include "delsarte/qz.hpp"

#include <numeric>

#include "delsarte/errors.hpp"

namespace delsarte {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("64-bit overflow in Q/Z arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("64-bit overflow in Q/Z arithmetic");
    return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

QZ QZ::normalize(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInput("Q/Z element with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const auto g = std::gcd(num, den);
    return QZ(num / g, den / g);
}

QZ QZ::from_rational(const Rational& r) {
    const Rational f = r.frac();
    return normalize(to_int64(f.numerator()), to_int64(f.denominator()));
}

QZ QZ::operator-() const { return num_ == 0 ? *this : QZ(den_ - num_, den_); }

QZ operator+(const QZ& a, const QZ& b) {
    const auto g = std::gcd(a.den_, b.den_);
    const auto ad = a.den_ / g;
    const auto den = checked_mul(ad, b.den_);
    const auto num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, ad));
    return QZ::normalize(num, den);
}

QZ operator*(std::int64_t t, const QZ& a) {
    // reduce t first so the product stays in range
    const auto tm = ((t % a.den_) + a.den_) % a.den_;
    return QZ::normalize(checked_mul(tm, a.num_), a.den_);
}

std::string QZ::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

QZVec4 QZVec4::operator-() const {
    QZVec4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = -coords[i];
    return r;
}

QZVec4 operator+(const QZVec4& a, const QZVec4& b) {
    QZVec4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

QZVec4 operator*(std::int64_t t, const QZVec4& v) {
    QZVec4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = t * v[i];
    return r;
}

bool QZVec4::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

std::int64_t QZVec4::order() const {
    std::int64_t n = 1;
    for (const auto& c : coords) n = checked_lcm(n, c.order());
    return n;
}

std::string QZVec4::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += coords[i].str();
    }
    return s + ")";
}

}  // namespace delsarte
