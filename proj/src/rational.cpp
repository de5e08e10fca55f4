#include "delsarte/rational.hpp"

#include "delsarte/errors.hpp"

namespace delsarte {

BigInt Rational::to_mpz(std::int64_t v) {
    // mpz_class has no portable int64 constructor; go through the string form.
    return BigInt(std::to_string(v));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + text + "'", 0);
    }
}

std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) throw ConsistencyError("integer exceeds 64-bit range: " + value.get_str());
    return value.get_si();
}

}  // namespace delsarte
