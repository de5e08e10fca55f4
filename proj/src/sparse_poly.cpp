#include "delsarte/sparse_poly.hpp"

#include <cctype>

#include "delsarte/errors.hpp"

namespace delsarte {

SparsePoly::SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

SparsePoly SparsePoly::monomial(const Rational& c, std::int64_t exponent) {
    if (exponent < 0) throw InvalidInput("negative exponent in polynomial");
    SparsePoly p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
}

Rational SparsePoly::coefficient(std::int64_t exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational() : it->second;
}

std::int64_t SparsePoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r += SparsePoly::monomial(ca * cb, ea + eb);
    return r;
}

SparsePoly SparsePoly::pow(std::uint64_t e) const {
    SparsePoly result(Rational(1));
    SparsePoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) s += c.sign() < 0 ? "-" : "";
        else s += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (e == 0) {
            s += mag.str();
            continue;
        }
        if (mag != Rational(1)) s += mag.str() + "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, std::int64_t n) : s_(text), n_(n) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial expression '" + s_ + "': " + why + " at column " + std::to_string(pos_), pos_);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    BigInt uint() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    SparsePoly expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        SparsePoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    bool starts_factor() {
        skip();
        return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 't' || s_[pos_] == '(');
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (true) {
            if (accept('*')) acc = acc * factor();
            else if (accept('/')) {
                const BigInt d = uint();
                if (d == 0) fail("division by zero");
                acc = acc * SparsePoly(Rational(BigInt(1), d));
            } else if (starts_factor()) acc = acc * factor();
            else return acc;
        }
    }

    SparsePoly factor() {
        SparsePoly a = atom();
        if (accept('^')) a = a.pow(static_cast<std::uint64_t>(to_int64(uint())));
        return a;
    }

    SparsePoly atom() {
        if (peek_digit()) return SparsePoly(Rational(uint()));
        if (accept('(')) {
            SparsePoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (accept('t')) {
            std::int64_t e = 1;
            if (accept('^')) e = exponent();
            return SparsePoly::monomial(Rational(1), e);
        }
        fail("expected a number, 't' or '('");
    }

    // affine := coeff ['n'] (('+'|'-') coeff ['n'])*, coeff := uint ['/' uint]; a bare 'n' has coefficient 1
    std::int64_t exponent() {
        if (accept('(')) {
            Rational v = affine();
            if (!accept(')')) fail("expected ')'");
            return integral(v);
        }
        // unparenthesised: a single uint, 'n', 'kn' or 'n/q'
        return integral(affine_term());
    }

    Rational affine() {
        bool neg = accept('-');
        if (!neg) accept('+');
        Rational v = affine_term();
        if (neg) v = -v;
        while (true) {
            if (accept('+')) v += affine_term();
            else if (accept('-')) v -= affine_term();
            else return v;
        }
    }

    Rational affine_term() {
        Rational c(1);
        bool has_coeff = false;
        if (peek_digit()) {
            c = Rational(uint());
            has_coeff = true;
        }
        if (accept('n')) {
            c *= Rational(n_);
            if (accept('/')) c /= Rational(uint());
        } else if (!has_coeff) {
            fail("expected an exponent");
        }
        return c;
    }

    std::int64_t integral(const Rational& v) const {
        if (!v.is_integer() || v.sign() < 0)
            throw PreconditionError("exponent in '" + s_ + "' is not a nonnegative integer at n = " + std::to_string(n_));
        return to_int64(v.numerator());
    }

    const std::string& s_;
    std::int64_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly eval_poly_expr(const std::string& text, std::int64_t n) { return ExprParser(text, n).parse(); }

}  // namespace delsarte
