#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "delsarte/sparse_poly.hpp"

namespace delsarte {

/// Kodaira symbol of a singular fibre.
class KodairaType {
public:
    enum class Kind { I, I_star, II, III, IV, IV_star, III_star, II_star };

    static KodairaType I(std::int64_t k);
    static KodairaType I_star(std::int64_t k);
    static KodairaType of(Kind kind);  // for the parameterless kinds

    /// "I1", "I(24)", "I0*", "I*(3)", "II", "III", "IV", "IV*", "III*", "II*".
    static KodairaType parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    std::int64_t index() const noexcept { return index_; }

    /// Euler number e_v of the fibre.
    std::int64_t euler() const;
    /// Number of irreducible components m_v.
    std::int64_t components() const;

    friend bool operator==(const KodairaType&, const KodairaType&) = default;

    std::string str() const;

private:
    KodairaType(Kind kind, std::int64_t index) : kind_(kind), index_(index) {}

    Kind kind_;
    std::int64_t index_ = 0;
};

struct FiberConfig {
    std::vector<std::pair<KodairaType, std::int64_t>> entries;  // (type, count > 0)

    std::string str() const;
};

/// y^2 = x^3 + a(t) x + b(t).
struct WeierstrassData {
    SparsePoly a;
    SparsePoly b;
};

std::int64_t euler_number(const FiberConfig& cfg);
/// h^2 = e - 2.
std::int64_t second_betti(const FiberConfig& cfg);
/// 2 + sum count * (m_v - 1).
std::int64_t rho_triv(const FiberConfig& cfg);

/// h2 - lambda - rho_triv; throws ConsistencyError on a negative result.
std::int64_t mordell_weil_rank(std::int64_t h2, std::int64_t lambda, std::int64_t rho);

/// -16 (4a^3 + 27b^2); throws NonElliptic when zero.
SparsePoly discriminant(const WeierstrassData& w);

/// Unreduced j = numerator / denominator = 1728 * 4a^3 / (4a^3 + 27b^2).
std::pair<SparsePoly, SparsePoly> j_invariant(const WeierstrassData& w);

/// p1/q1 == p2/q2 by cross-multiplication (q's nonzero).
bool same_fraction(const std::pair<SparsePoly, SparsePoly>& a, const std::pair<SparsePoly, SparsePoly>& b);

}  // namespace delsarte
