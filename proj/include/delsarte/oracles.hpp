#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "delsarte/lattice.hpp"
#include "delsarte/polygon.hpp"

// Brute-force reference implementations. None of these call into the optimized
// lattice or Pick-formula paths they are used to check.
namespace delsarte::oracles {

/// Lefschetz number via adjugate inverse, full triple-loop enumeration and exact t-scan.
std::size_t brute_lambda(const ExponentMatrix& a);

/// Size of L as enumerated by brute_lambda's triple loop.
std::size_t brute_group_order(const ExponentMatrix& a);

struct ScanCounts {
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
};

/// Bounding-box scan with half-plane tests.
ScanCounts interior_scan(const IntegralPolygon& p);

/// n in (3, limit] with no prime p = 2 mod 3 such that 3p < n and p does not divide n.
std::vector<std::int64_t> prime_gap_scan(std::int64_t limit);

struct CensusReport {
    std::vector<CensusClass> classes;
    std::map<std::size_t, std::size_t> corner_histogram;
    bool scan_agrees = true;  // interior_scan matches lattice_counts on every class

    std::size_t total() const { return classes.size(); }
    std::size_t at_most_four_corners() const;
};

CensusReport class_census(std::int64_t bound);

}  // namespace delsarte::oracles
