#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace delsarte::props {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return cases >= 100 && failures == 0; }
};

PropertyResult negation_symmetry(std::uint32_t seed, int cases);
PropertyResult row_permutation_invariance(std::uint32_t seed, int cases);
PropertyResult column_permutation_invariance(std::uint32_t seed, int cases);
PropertyResult coordinate_sum_zero(std::uint32_t seed, int cases);
PropertyResult lambda_bounds_and_oracle(std::uint32_t seed, int cases);
PropertyResult worker_count_determinism(std::uint32_t seed, int cases);

PropertyResult qz_scaling_order(std::uint32_t seed, int cases);
PropertyResult qz_additive_inverse(std::uint32_t seed, int cases);
PropertyResult inverse_times_matrix(std::uint32_t seed, int cases);

PropertyResult equivalence_laws(std::uint32_t seed, int cases);
PropertyResult equivalence_invariants(std::uint32_t seed, int cases);
PropertyResult witness_maps_lattice_points(std::uint32_t seed, int cases);
PropertyResult hull_commutation(std::uint32_t seed, int cases);
PropertyResult pick_matches_scan(std::uint32_t seed, int cases);

PropertyResult discriminant_sign_of_b(std::uint32_t seed, int cases);
PropertyResult j_denominator_is_discriminant(std::uint32_t seed, int cases);
PropertyResult fiber_order_invariance(std::uint32_t seed, int cases);

/// The five suites named in the acceptance criteria.
std::vector<PropertyResult> acceptance_suites(std::uint32_t seed);

}  // namespace delsarte::props
