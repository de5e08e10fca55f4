#include "delsarte/oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "delsarte/errors.hpp"
#include "delsarte/rational.hpp"

namespace delsarte::oracles {

namespace {

// Integer vectors modulo a common denominator D: the element (k_0, .., k_3) stands for (k_i / D) mod 1.
struct ModVec {
    std::array<std::int64_t, 4> k{};
};

struct Enumeration {
    std::int64_t denom = 1;
    std::vector<ModVec> elements;
};

struct ArrayHash {
    std::size_t operator()(const std::array<std::int64_t, 4>& a) const noexcept {
        std::size_t h = 0;
        for (auto x : a) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
        return h;
    }
};


BigInt minor3(const IntMat4& m, std::size_t skip_row, std::size_t skip_col) {
    std::array<std::array<BigInt, 3>, 3> s;
    std::size_t r = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != skip_col) s[r][c++] = BigInt(std::to_string(m[i][j]));
        ++r;
    }
    return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
           s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

Enumeration enumerate(const ExponentMatrix& a) {
    const IntMat4& m = a.rows();
    // adj(A)[i][j] = (-1)^(i+j) * minor(j, i); A^-1 = adj(A) / det(A)
    std::array<std::array<BigInt, 4>, 4> adj;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            adj[i][j] = minor3(m, j, i);
            if ((i + j) % 2) adj[i][j] = -adj[i][j];
        }
    BigInt det = 0;
    for (std::size_t j = 0; j < 4; ++j) det += BigInt(std::to_string(m[0][j])) * adj[j][0];
    if (det == 0) throw SingularMatrix("singular exponent matrix");
    if (det < 0) {
        det = -det;
        for (auto& row : adj)
            for (auto& e : row) e = -e;
    }

    Enumeration out;
    out.denom = to_int64(det);
    const std::int64_t d = out.denom;
    std::array<ModVec, 3> gens;
    std::array<std::int64_t, 3> orders{};
    for (std::size_t g = 0; g < 3; ++g) {
        std::int64_t common = d;
        for (std::size_t j = 0; j < 4; ++j) {
            // row g of adj minus row 3 of adj
            const BigInt v = adj[g][j] - adj[3][j];
            BigInt r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), det.get_mpz_t());
            gens[g].k[j] = to_int64(r);
            common = std::gcd(common, gens[g].k[j]);
        }
        orders[g] = d / common;
    }

    std::unordered_set<std::array<std::int64_t, 4>, ArrayHash> seen;
    ModVec vi;
    for (std::int64_t i = 0; i < orders[0]; ++i) {
        ModVec vj = vi;
        for (std::int64_t j = 0; j < orders[1]; ++j) {
            ModVec vk = vj;
            for (std::int64_t k = 0; k < orders[2]; ++k) {
                if (seen.insert(vk.k).second) out.elements.push_back(vk);
                for (std::size_t c = 0; c < 4; ++c) vk.k[c] = (vk.k[c] + gens[2].k[c]) % d;
            }
            for (std::size_t c = 0; c < 4; ++c) vj.k[c] = (vj.k[c] + gens[1].k[c]) % d;
        }
        for (std::size_t c = 0; c < 4; ++c) vi.k[c] = (vi.k[c] + gens[0].k[c]) % d;
    }
    return out;
}

bool member(const ModVec& v, std::int64_t d) {
    std::array<Rational, 4> a;
    BigInt n = 1;
    for (std::size_t i = 0; i < 4; ++i) {
        if (v.k[i] == 0) return false;
        a[i] = Rational(v.k[i], d);
        const BigInt den = a[i].denominator();
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
    }
    const Rational two(2);
    for (BigInt t = 1; t <= n; ++t) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        if (g != 1) continue;
        Rational sum;
        for (const auto& ai : a) sum += (Rational(t) * ai).frac();
        if (sum != two) return true;
    }
    return false;
}

}  // namespace

std::size_t brute_lambda(const ExponentMatrix& a) {
    const Enumeration e = enumerate(a);
    std::size_t count = 0;
    for (const auto& v : e.elements)
        if (member(v, e.denom)) ++count;
    return count;
}

std::size_t brute_group_order(const ExponentMatrix& a) { return enumerate(a).elements.size(); }

ScanCounts interior_scan(const IntegralPolygon& p) {
    const auto& v = p.vertices();
    std::int64_t x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
    for (const auto& q : v) {
        x0 = std::min(x0, q.x);
        x1 = std::max(x1, q.x);
        y0 = std::min(y0, q.y);
        y1 = std::max(y1, q.y);
    }
    ScanCounts out;
    const std::size_t n = v.size();
    for (std::int64_t x = x0; x <= x1; ++x)
        for (std::int64_t y = y0; y <= y1; ++y) {
            bool inside = true, on_edge = false;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % n];
                const std::int64_t side = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
                if (side < 0) inside = false;
                if (side == 0 && std::min(a.x, b.x) <= x && x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= y &&
                    y <= std::max(a.y, b.y))
                    on_edge = true;
            }
            if (on_edge) ++out.boundary;
            else if (inside) ++out.interior;
        }
    return out;
}

std::vector<std::int64_t> prime_gap_scan(std::int64_t limit) {
    auto is_prime = [](std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    };
    std::vector<std::int64_t> out;
    for (std::int64_t n = 4; n <= limit; ++n) {
        bool found = false;
        for (std::int64_t p = 2; 3 * p < n && !found; ++p)
            if (p % 3 == 2 && is_prime(p) && n % p != 0) found = true;
        if (!found) out.push_back(n);
    }
    return out;
}

std::size_t CensusReport::at_most_four_corners() const {
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(),
                                                  [](const CensusClass& c) { return c.representative.corners() <= 4; }));
}

CensusReport class_census(std::int64_t bound) {
    CensusReport r;
    r.classes = enumerate_one_interior_classes(bound);
    for (const auto& c : r.classes) {
        ++r.corner_histogram[c.representative.corners()];
        const auto scan = interior_scan(c.representative);
        const auto counts = lattice_counts(c.representative);
        if (scan.interior != 1 || scan.interior != counts.interior || scan.boundary != counts.boundary) r.scan_agrees = false;
    }
    return r;
}

}  // namespace delsarte::oracles
