#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace delsarte {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; canonicalization happens on
/// every construction so stored values are always reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(to_mpz(value)) {}  // NOLINT(implicit)
    Rational(const BigInt& value) : value_(value) {}         // NOLINT(implicit)
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Largest integer not exceeding the value.
    BigInt floor() const;
    /// The value minus its floor, in [0, 1).
    Rational frac() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" for integers.
    std::string str() const;
    /// Parses "p", "-p", "p/q".
    static Rational parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
    static BigInt to_mpz(std::int64_t v);

    mpq_class value_;
};

/// Converts to int64, throwing ConsistencyError when it does not fit.
std::int64_t to_int64(const BigInt& value);

}  // namespace delsarte
