#include "delsarte/surface.hpp"

#include <cctype>

#include "delsarte/errors.hpp"

namespace delsarte {

KodairaType KodairaType::I(std::int64_t k) {
    if (k < 1) throw InvalidInput("I_k needs k >= 1");
    return {Kind::I, k};
}

KodairaType KodairaType::I_star(std::int64_t k) {
    if (k < 0) throw InvalidInput("I*_k needs k >= 0");
    return {Kind::I_star, k};
}

KodairaType KodairaType::of(Kind kind) {
    if (kind == Kind::I || kind == Kind::I_star) throw InvalidInput("I_k and I*_k need an index");
    return {kind, 0};
}

KodairaType KodairaType::parse(const std::string& text) {
    if (text == "II") return of(Kind::II);
    if (text == "III") return of(Kind::III);
    if (text == "IV") return of(Kind::IV);
    if (text == "IV*") return of(Kind::IV_star);
    if (text == "III*") return of(Kind::III_star);
    if (text == "II*") return of(Kind::II_star);
    if (text.size() >= 2 && text[0] == 'I') {
        std::string rest = text.substr(1);
        bool star = false;
        if (rest.front() == '*') {  // I*(k)
            star = true;
            rest.erase(0, 1);
        } else if (rest.back() == '*') {  // I0*
            star = true;
            rest.pop_back();
        }
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); })) {
            const std::int64_t k = std::stoll(rest);
            return star ? I_star(k) : I(k);
        }
    }
    throw ParseError("unknown Kodaira type '" + text + "'", 0);
}

std::int64_t KodairaType::euler() const {
    switch (kind_) {
        case Kind::I: return index_;
        case Kind::I_star: return index_ + 6;
        case Kind::II: return 2;
        case Kind::III: return 3;
        case Kind::IV: return 4;
        case Kind::IV_star: return 8;
        case Kind::III_star: return 9;
        case Kind::II_star: return 10;
    }
    return 0;
}

std::int64_t KodairaType::components() const {
    switch (kind_) {
        case Kind::I: return index_;
        case Kind::I_star: return index_ + 5;
        case Kind::II: return 1;
        case Kind::III: return 2;
        case Kind::IV: return 3;
        case Kind::IV_star: return 7;
        case Kind::III_star: return 8;
        case Kind::II_star: return 9;
    }
    return 0;
}

std::string KodairaType::str() const {
    switch (kind_) {
        case Kind::I: return "I" + std::to_string(index_);
        case Kind::I_star: return "I" + std::to_string(index_) + "*";
        case Kind::II: return "II";
        case Kind::III: return "III";
        case Kind::IV: return "IV";
        case Kind::IV_star: return "IV*";
        case Kind::III_star: return "III*";
        case Kind::II_star: return "II*";
    }
    return "?";
}

std::string FiberConfig::str() const {
    std::string s;
    for (const auto& [type, count] : entries) {
        if (!s.empty()) s += " + ";
        s += std::to_string(count) + "x" + type.str();
    }
    return s.empty() ? "none" : s;
}

std::int64_t euler_number(const FiberConfig& cfg) {
    if (cfg.entries.empty()) throw InvalidInput("empty fibre configuration");
    std::int64_t e = 0;
    for (const auto& [type, count] : cfg.entries) {
        if (count <= 0) throw InvalidInput("fibre counts must be positive");
        e += count * type.euler();
    }
    return e;
}

std::int64_t second_betti(const FiberConfig& cfg) { return euler_number(cfg) - 2; }

std::int64_t rho_triv(const FiberConfig& cfg) {
    std::int64_t r = 2;
    for (const auto& [type, count] : cfg.entries) {
        if (count <= 0) throw InvalidInput("fibre counts must be positive");
        r += count * (type.components() - 1);
    }
    return r;
}

std::int64_t mordell_weil_rank(std::int64_t h2, std::int64_t lambda, std::int64_t rho) {
    const std::int64_t r = h2 - lambda - rho;
    if (r < 0)
        throw ConsistencyError("negative rank " + std::to_string(r) + " = " + std::to_string(h2) + " - " +
                               std::to_string(lambda) + " - " + std::to_string(rho));
    return r;
}

namespace {

SparsePoly four_a3_plus_27_b2(const WeierstrassData& w) {
    return SparsePoly(Rational(4)) * w.a.pow(3) + SparsePoly(Rational(27)) * w.b.pow(2);
}

}  // namespace

SparsePoly discriminant(const WeierstrassData& w) {
    SparsePoly d = SparsePoly(Rational(-16)) * four_a3_plus_27_b2(w);
    if (d.is_zero()) throw NonElliptic("discriminant vanishes identically");
    return d;
}

std::pair<SparsePoly, SparsePoly> j_invariant(const WeierstrassData& w) {
    SparsePoly den = four_a3_plus_27_b2(w);
    if (den.is_zero()) throw NonElliptic("discriminant vanishes identically");
    return {SparsePoly(Rational(1728 * 4)) * w.a.pow(3), den};
}

bool same_fraction(const std::pair<SparsePoly, SparsePoly>& a, const std::pair<SparsePoly, SparsePoly>& b) {
    return a.first * b.second == b.first * a.second;
}

}  // namespace delsarte
