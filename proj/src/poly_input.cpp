#include "delsarte/poly_input.hpp"

#include <cctype>
#include <vector>

#include "delsarte/errors.hpp"

namespace delsarte {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExponentTerms run() {
        std::vector<std::pair<Monomial, std::size_t>> terms;
        skip();
        terms.emplace_back(term(), pos_);
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            if (s_[pos_] != '+') fail("expected '+' between terms");
            ++pos_;
            terms.emplace_back(term(), pos_);
        }
        if (terms.size() != 4)
            throw InvalidInput("expected exactly 4 terms, got " + std::to_string(terms.size()) + " in '" + s_ + "'");
        std::array<Monomial, 4> m;
        for (std::size_t i = 0; i < 4; ++i) {
            m[i] = terms[i].first;
            for (std::size_t j = 0; j < i; ++j)
                if (m[j] == m[i]) throw InvalidInput("repeated monomial (term " + std::to_string(i + 1) + ") in '" + s_ + "'");
        }
        return ExponentTerms(m);
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at column " + std::to_string(pos_) + " in '" + s_ + "'", pos_);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_factor() {
        skip();
        return pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == 'X' || s_[pos_] == 'Y' || s_[pos_] == '1' || s_[pos_] == '*');
    }

    Monomial term() {
        Monomial m;
        factor(m);
        while (at_factor()) {
            if (s_[pos_] == '*') {
                ++pos_;
                skip();
            }
            factor(m);
        }
        return m;
    }

    void factor(Monomial& m) {
        skip();
        if (pos_ == s_.size()) fail("expected a factor");
        const char c = s_[pos_];
        if (c == '1') {
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("coefficients other than 1 are not supported");
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) fail("coefficients other than 1 are not supported");
        if (c != 't' && c != 'X' && c != 'Y') fail(std::string("unexpected '") + c + "'");
        ++pos_;
        std::int64_t e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent after '^'");
            if (pos_ - start > 12) fail("exponent too large");
            e = std::stoll(s_.substr(start, pos_ - start));
        }
        (c == 't' ? m.t : c == 'X' ? m.x : m.y) += e;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string power(char var, std::int64_t e) {
    if (e == 0) return "";
    std::string s(1, var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

ExponentTerms parse_polynomial(const std::string& text) { return Parser(text).run(); }

std::string format_polynomial(const ExponentTerms& terms) {
    std::string out;
    for (const auto& m : terms.terms()) {
        if (!out.empty()) out += " + ";
        std::string t;
        for (const auto& part : {power('t', m.t), power('X', m.x), power('Y', m.y)}) {
            if (part.empty()) continue;
            if (!t.empty()) t += "*";
            t += part;
        }
        out += t.empty() ? "1" : t;
    }
    return out;
}

}  // namespace delsarte
