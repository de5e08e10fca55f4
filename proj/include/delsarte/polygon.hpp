#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delsarte/rational.hpp"

namespace delsarte {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    std::string str() const;
};

/// Lattice polygon given by its corners: counterclockwise, no three consecutive
/// collinear, starting at the lexicographically smallest corner.
class IntegralPolygon {
public:
    /// Accepts any corner list that already satisfies the invariants; validates them.
    explicit IntegralPolygon(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    std::size_t corners() const noexcept { return vertices_.size(); }

    /// Twice the (positive) area.
    std::int64_t twice_area() const;

    /// Non-strict containment (boundary counts as inside).
    bool contains(LatticePoint p) const;

    friend bool operator==(const IntegralPolygon&, const IntegralPolygon&) = default;

    std::string str() const;

private:
    std::vector<LatticePoint> vertices_;
};

/// x -> matrix * x + shift with |det matrix| = 1.
struct UnimodularAffineMap {
    std::array<std::array<std::int64_t, 2>, 2> matrix{{{1, 0}, {0, 1}}};
    LatticePoint shift{};

    static UnimodularAffineMap identity() { return {}; }

    std::int64_t det() const { return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]; }
    LatticePoint operator()(LatticePoint p) const;

    /// (this ∘ inner)(p) = this(inner(p)).
    UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;
    UnimodularAffineMap inverse() const;

    friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;

    std::string str() const;
};

struct LatticeCounts {
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
    Rational area;
};

/// A support point carrying an opaque coefficient tag.
struct SupportPoint {
    LatticePoint point;
    std::int64_t tag = 0;

    friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
    friend auto operator<=>(const SupportPoint&, const SupportPoint&) = default;
};

struct GenusResult {
    std::int64_t genus_bound = 0;
    bool exact = false;
};

struct PolygonClassId {
    std::string id;
    IntegralPolygon canonical;
};

IntegralPolygon convex_hull(const std::vector<LatticePoint>& points);

/// Interior/boundary lattice points via Pick's theorem; area exact.
LatticeCounts lattice_counts(const IntegralPolygon& p);

/// Interior lattice count of the hull; exact when the caller certifies det(A_f) != 0.
GenusResult genus_of_support(const std::vector<LatticePoint>& support, bool nondegenerate);

IntegralPolygon to_default_position(const IntegralPolygon& p);

/// Witness map sending p onto q, or nullopt when the polygons are not integrally equivalent.
std::optional<UnimodularAffineMap> integral_equivalence(const IntegralPolygon& p, const IntegralPolygon& q);

/// The 16 one-interior-point classes: w1..w12 (at most four corners), x1..x4 (more).
const std::vector<PolygonClassId>& canonical_classes();

const PolygonClassId& classify_one_interior(const IntegralPolygon& p);

struct CensusClass {
    std::string id;              // label of the matching canonical class, "?" if none
    IntegralPolygon representative;  // first polygon found, default position
    std::size_t found = 0;       // default-position polygons in the class
};

/// Exhaustive search of hulls with 3..6 corners in [0, bound]^2 having one interior point,
/// deduplicated up to integral equivalence. Sorted by canonical label.
std::vector<CensusClass> enumerate_one_interior_classes(std::int64_t bound);

/// Image of a support under a unimodular map, translated to default position; tags unchanged.
std::vector<SupportPoint> transform_support(const std::vector<SupportPoint>& support, const UnimodularAffineMap& map);

}  // namespace delsarte
