#include "delsarte/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "delsarte/errors.hpp"

namespace delsarte {

namespace {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::int64_t cross(LatticePoint u, LatticePoint v) { return u.x * v.y - u.y * v.x; }

std::vector<LatticePoint> sorted_vertices(const IntegralPolygon& p) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::string LatticePoint::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

IntegralPolygon::IntegralPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw DegenerateSupport("polygon needs at least three corners");
    if (std::min_element(vertices_.begin(), vertices_.end()) != vertices_.begin())
        throw InvalidInput("polygon must start at its lexicographically smallest corner");
    for (std::size_t i = 0; i < n; ++i)
        if (cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0)
            throw InvalidInput("polygon corners must be strictly convex and counterclockwise");
}

std::int64_t IntegralPolygon::twice_area() const {
    std::int64_t s = 0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(vertices_[i], vertices_[(i + 1) % n]);
    return s;
}

bool IntegralPolygon::contains(LatticePoint p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
    return true;
}

std::string IntegralPolygon::str() const {
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += " ";
        s += vertices_[i].str();
    }
    return s;
}

LatticePoint UnimodularAffineMap::operator()(LatticePoint p) const {
    return {matrix[0][0] * p.x + matrix[0][1] * p.y + shift.x, matrix[1][0] * p.x + matrix[1][1] * p.y + shift.y};
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& inner) const {
    UnimodularAffineMap r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.matrix[i][j] = matrix[i][0] * inner.matrix[0][j] + matrix[i][1] * inner.matrix[1][j];
    r.shift = (*this)(inner.shift);
    return r;
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    const std::int64_t d = det();  // ±1, so 1/d = d
    UnimodularAffineMap r;
    r.matrix = {{{matrix[1][1] * d, -matrix[0][1] * d}, {-matrix[1][0] * d, matrix[0][0] * d}}};
    UnimodularAffineMap linear = r;
    linear.shift = {};
    const LatticePoint s = linear(shift);
    r.shift = {-s.x, -s.y};
    return r;
}

std::string UnimodularAffineMap::str() const {
    return "[[" + std::to_string(matrix[0][0]) + "," + std::to_string(matrix[0][1]) + "],[" +
           std::to_string(matrix[1][0]) + "," + std::to_string(matrix[1][1]) + "]] + " + shift.str();
}

IntegralPolygon convex_hull(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw DegenerateSupport("support has fewer than three distinct points");

    // Andrew's monotone chain; collinear points are dropped.
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegenerateSupport("support is collinear");
    return IntegralPolygon(std::move(hull));
}

LatticeCounts lattice_counts(const IntegralPolygon& p) {
    const auto& v = p.vertices();
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto e = v[(i + 1) % v.size()] - v[i];
        boundary += std::gcd(e.x, e.y);
    }
    const std::int64_t a2 = p.twice_area();
    // Pick: A = I + B/2 - 1
    return {(a2 - boundary + 2) / 2, boundary, Rational(a2, 2)};
}

GenusResult genus_of_support(const std::vector<LatticePoint>& support, bool nondegenerate) {
    return {lattice_counts(convex_hull(support)).interior, nondegenerate};
}

IntegralPolygon to_default_position(const IntegralPolygon& p) {
    std::int64_t mx = p.vertices().front().x, my = p.vertices().front().y;
    for (const auto& v : p.vertices()) {
        mx = std::min(mx, v.x);
        my = std::min(my, v.y);
    }
    std::vector<LatticePoint> out;
    out.reserve(p.corners());
    for (const auto& v : p.vertices()) out.push_back({v.x - mx, v.y - my});
    return IntegralPolygon(std::move(out));
}

std::optional<UnimodularAffineMap> integral_equivalence(const IntegralPolygon& p, const IntegralPolygon& q) {
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    const std::size_t n = pv.size();
    if (n != qv.size() || p.twice_area() != q.twice_area()) return std::nullopt;

    const LatticePoint u1 = pv[1] - pv[0];
    const LatticePoint u2 = pv[n - 1] - pv[0];
    const std::int64_t du = cross(u1, u2);
    const auto target = sorted_vertices(q);

    for (std::size_t j = 0; j < n; ++j) {
        const LatticePoint next = qv[(j + 1) % n] - qv[j];
        const LatticePoint prev = qv[(j + n - 1) % n] - qv[j];
        for (const auto& [v1, v2] : {std::pair{next, prev}, std::pair{prev, next}}) {
            // M [u1 u2] = [v1 v2]  =>  M = [v1 v2] adj[u1 u2] / du
            const std::int64_t m00 = v1.x * u2.y - v2.x * u1.y;
            const std::int64_t m01 = -v1.x * u2.x + v2.x * u1.x;
            const std::int64_t m10 = v1.y * u2.y - v2.y * u1.y;
            const std::int64_t m11 = -v1.y * u2.x + v2.y * u1.x;
            if (m00 % du || m01 % du || m10 % du || m11 % du) continue;
            UnimodularAffineMap map;
            map.matrix = {{{m00 / du, m01 / du}, {m10 / du, m11 / du}}};
            if (map.det() != 1 && map.det() != -1) continue;
            const LatticePoint image0 = UnimodularAffineMap{map.matrix, {}}(pv[0]);
            map.shift = qv[j] - image0;
            std::vector<LatticePoint> mapped;
            mapped.reserve(n);
            for (const auto& v : pv) mapped.push_back(map(v));
            std::sort(mapped.begin(), mapped.end());
            if (mapped == target) return map;
        }
    }
    return std::nullopt;
}

const std::vector<PolygonClassId>& canonical_classes() {
    static const std::vector<PolygonClassId> classes = [] {
        // w1..w12: default-position hulls of the defining polynomials of each table group.
        // x1..x4: the classes with five or six corners, as found by the census.
        const std::vector<std::pair<std::string, std::vector<LatticePoint>>> supports = {
            {"w1", {{0, 0}, {3, 0}, {0, 2}}},
            {"w2", {{1, 0}, {3, 0}, {0, 2}}},
            {"w3", {{0, 1}, {3, 0}, {0, 2}}},
            {"w4", {{0, 0}, {4, 0}, {0, 2}}},
            {"w5", {{0, 0}, {3, 0}, {0, 3}}},
            {"w6", {{2, 0}, {0, 1}, {3, 0}, {0, 2}}},
            {"w7", {{1, 0}, {0, 1}, {3, 0}, {0, 2}}},
            {"w8", {{0, 0}, {2, 1}, {3, 0}, {0, 2}}},
            {"w9", {{0, 0}, {2, 1}, {2, 0}, {0, 2}}},
            {"w10", {{1, 0}, {0, 1}, {2, 1}, {1, 2}}},
            {"w11", {{0, 0}, {1, 2}, {3, 0}, {0, 2}}},
            {"w12", {{0, 0}, {2, 0}, {0, 2}, {2, 2}}},
            {"x1", {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {0, 2}}},
            {"x2", {{0, 0}, {1, 0}, {2, 2}, {2, 3}, {0, 1}}},
            {"x3", {{0, 1}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}},
            {"x4", {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}},
        };
        std::vector<PolygonClassId> out;
        for (const auto& [id, pts] : supports) out.push_back({id, to_default_position(convex_hull(pts))});
        return out;
    }();
    return classes;
}

const PolygonClassId& classify_one_interior(const IntegralPolygon& p) {
    if (lattice_counts(p).interior != 1)
        throw InvalidInput("polygon " + p.str() + " does not have exactly one interior lattice point");
    for (const auto& c : canonical_classes())
        if (integral_equivalence(p, c.canonical)) return c;
    throw ConsistencyError("polygon " + p.str() + " matches none of the 16 one-interior-point classes");
}

std::vector<CensusClass> enumerate_one_interior_classes(std::int64_t bound) {
    if (bound < 4) throw InvalidInput("census bound must be at least 4");
    std::vector<LatticePoint> grid;
    for (std::int64_t x = 0; x <= bound; ++x)
        for (std::int64_t y = 0; y <= bound; ++y) grid.push_back({x, y});

    std::set<std::vector<LatticePoint>> seen;  // default-position corner lists
    std::vector<CensusClass> classes;

    const std::size_t m = grid.size();
    std::vector<std::size_t> idx;
    std::vector<LatticePoint> chosen;
    for (std::size_t k = 3; k <= 6; ++k) {
        idx.resize(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            chosen.clear();
            for (auto i : idx) chosen.push_back(grid[i]);
            bool keep = false;
            std::optional<IntegralPolygon> hull;
            try {
                hull = convex_hull(chosen);
                keep = hull->corners() == k && lattice_counts(*hull).interior == 1;
            } catch (const DegenerateSupport&) {
            }
            if (keep) {
                IntegralPolygon dp = to_default_position(*hull);
                if (seen.insert(dp.vertices()).second) {
                    auto it = std::find_if(classes.begin(), classes.end(), [&](const CensusClass& c) {
                        return integral_equivalence(dp, c.representative).has_value();
                    });
                    if (it == classes.end()) classes.push_back({"?", dp, 1});
                    else ++it->found;
                }
            }
            // next k-combination of [0, m)
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    const auto& canon = canonical_classes();
    std::map<std::size_t, CensusClass> ordered;
    std::size_t unknown = canon.size();
    for (auto& c : classes) {
        std::size_t pos = unknown++;
        for (std::size_t i = 0; i < canon.size(); ++i)
            if (integral_equivalence(c.representative, canon[i].canonical)) {
                pos = i;
                c.id = canon[i].id;
                break;
            }
        ordered.emplace(pos, std::move(c));
    }
    std::vector<CensusClass> out;
    for (auto& [pos, c] : ordered) out.push_back(std::move(c));
    return out;
}

std::vector<SupportPoint> transform_support(const std::vector<SupportPoint>& support, const UnimodularAffineMap& map) {
    if (map.det() != 1 && map.det() != -1) throw InvalidInput("map is not unimodular");
    std::vector<SupportPoint> out;
    out.reserve(support.size());
    for (const auto& s : support) out.push_back({map(s.point), s.tag});
    if (out.empty()) return out;
    std::int64_t mx = out.front().point.x, my = out.front().point.y;
    for (const auto& s : out) {
        mx = std::min(mx, s.point.x);
        my = std::min(my, s.point.y);
    }
    for (auto& s : out) s.point = s.point - LatticePoint{mx, my};
    return out;
}

}  // namespace delsarte
