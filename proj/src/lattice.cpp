#include "delsarte/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "delsarte/errors.hpp"

namespace delsarte {

ExponentTerms::ExponentTerms(const std::array<Monomial, 4>& terms) : terms_(terms) {
    for (const auto& m : terms_)
        if (m.t < 0 || m.x < 0 || m.y < 0) throw InvalidInput("negative exponent in " + str());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (terms_[i] == terms_[j]) throw InvalidInput("duplicate term in " + str());
}

std::string ExponentTerms::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(terms_[i].t) + "," + std::to_string(terms_[i].x) + "," +
             std::to_string(terms_[i].y) + ")";
    }
    return s + "}";
}

ExponentMatrix ExponentMatrix::from_rows(const IntMat4& rows) {
    const std::int64_t d = rows[0][0] + rows[0][1] + rows[0][2] + rows[0][3];
    for (const auto& row : rows) {
        for (auto e : row)
            if (e < 0) throw InvalidInput("negative entry in exponent matrix");
        if (row[0] + row[1] + row[2] + row[3] != d) throw InvalidInput("exponent matrix rows have unequal sums");
    }
    BigInt det = determinant(rows);
    if (det == 0) throw SingularMatrix("det(A_f) = 0; the four-term method does not apply");
    return ExponentMatrix(rows, d, std::move(det));
}

std::string ExponentMatrix::str() const {
    std::string s;
    for (const auto& row : rows_) {
        s += "(";
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) s += ",";
            s += std::to_string(row[j]);
        }
        s += ")";
    }
    return s;
}

ExponentMatrix homogenize(const ExponentTerms& terms) {
    std::int64_t d = 0;
    for (const auto& m : terms.terms()) d = std::max(d, m.t + m.x + m.y);
    IntMat4 rows;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& m = terms[i];
        rows[i] = {m.x, m.y, d - m.t - m.x - m.y, m.t};
    }
    return ExponentMatrix::from_rows(rows);
}

std::array<QZVec4, 3> lattice_generators(const ExponentMatrix& a) {
    const RatMat4 inv = mat4_inverse(a.rows());
    std::array<QZVec4, 3> gens;
    for (std::size_t i = 0; i < 3; ++i) {
        IntVec4 e{0, 0, 0, -1};
        e[i] = 1;
        gens[i] = row_vec_apply(e, inv);
    }
    return gens;
}

LatticeGroup enumerate_group(const std::vector<QZVec4>& gens) {
    // Extend the subgroup one generator at a time: H' = union of H + i*g for i below
    // the index of H in <H, g>.
    std::vector<QZVec4> current{QZVec4{}};
    std::unordered_set<QZVec4> members{QZVec4{}};
    for (const auto& g : gens) {
        QZVec4 step = g;
        std::int64_t index = 1;
        while (!members.contains(step)) {
            step = step + g;
            ++index;
        }
        std::vector<QZVec4> next;
        next.reserve(current.size() * static_cast<std::size_t>(index));
        QZVec4 shift{};
        for (std::int64_t i = 0; i < index; ++i) {
            for (const auto& h : current) next.push_back(h + shift);
            shift = shift + g;
        }
        current = std::move(next);
        members = std::unordered_set<QZVec4>(current.begin(), current.end());
    }
    LatticeGroup out;
    std::sort(current.begin(), current.end());
    out.elements = std::move(current);
    return out;
}

LatticeGroup enumerate_group(const std::array<QZVec4, 3>& gens) {
    LatticeGroup out = enumerate_group(std::vector<QZVec4>(gens.begin(), gens.end()));
    out.generators = gens;
    return out;
}

bool in_lambda(const QZVec4& v) {
    for (const auto& c : v.coords)
        if (c.is_zero()) return false;
    const std::int64_t n = v.order();
    // Put all coordinates over the common denominator n: a_i = k_i / n.
    std::array<__int128, 4> k{};
    for (std::size_t i = 0; i < 4; ++i) k[i] = static_cast<__int128>(v[i].numerator()) * (n / v[i].denominator());
    const __int128 two_n = 2 * static_cast<__int128>(n);
    for (std::int64_t t = 1; t <= n; ++t) {
        if (std::gcd(t, n) != 1) continue;
        __int128 s = 0;
        for (auto ki : k) s += (ki * t) % n;
        if (s != two_n) return true;
    }
    return false;
}

unsigned default_workers() {
    if (const char* env = std::getenv("DELSARTE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

LambdaResult lefschetz_number(const ExponentMatrix& a, unsigned workers) {
    const LatticeGroup group = enumerate_group(lattice_generators(a));
    if (workers == 0) workers = default_workers();
    const std::size_t total = group.size();
    workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, total / 64)));

    std::vector<std::size_t> counts(workers, 0);
    auto count_range = [&](unsigned w) {
        const std::size_t lo = total * w / workers;
        const std::size_t hi = total * (w + 1) / workers;
        std::size_t c = 0;
        for (std::size_t i = lo; i < hi; ++i)
            if (in_lambda(group.elements[i])) ++c;
        counts[w] = c;
    };
    if (workers == 1) {
        count_range(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(count_range, w);
    }
    return {total, std::accumulate(counts.begin(), counts.end(), std::size_t{0})};
}

}  // namespace delsarte
