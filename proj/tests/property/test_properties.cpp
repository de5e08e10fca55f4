#include <gtest/gtest.h>

#include "properties.hpp"

using namespace delsarte::props;

namespace {

constexpr std::uint32_t kSeed = 20240611;

void expect_holds(const PropertyResult& r) {
    EXPECT_GE(r.cases, 100) << r.name;
    EXPECT_EQ(r.failures, 0) << r.name << ", first counterexample: " << r.first_failure;
}

}  // namespace

TEST(LatticeProperties, NegationSymmetry) { expect_holds(negation_symmetry(kSeed, 300)); }
TEST(LatticeProperties, RowPermutation) { expect_holds(row_permutation_invariance(kSeed + 1, 100)); }
TEST(LatticeProperties, ColumnPermutation) { expect_holds(column_permutation_invariance(kSeed + 2, 100)); }
TEST(LatticeProperties, CoordinateSumZero) { expect_holds(coordinate_sum_zero(kSeed + 3, 100)); }
TEST(LatticeProperties, BoundsAndOracle) { expect_holds(lambda_bounds_and_oracle(kSeed + 4, 100)); }
TEST(LatticeProperties, WorkerCount) { expect_holds(worker_count_determinism(kSeed + 5, 100)); }

TEST(ArithmeticProperties, ScalingOrder) { expect_holds(qz_scaling_order(kSeed + 6, 1000)); }
TEST(ArithmeticProperties, AdditiveInverse) { expect_holds(qz_additive_inverse(kSeed + 7, 1000)); }
TEST(ArithmeticProperties, InverseTimesMatrix) { expect_holds(inverse_times_matrix(kSeed + 8, 200)); }

TEST(PolygonProperties, EquivalenceLaws) { expect_holds(equivalence_laws(kSeed + 9, 200)); }
TEST(PolygonProperties, EquivalenceInvariants) { expect_holds(equivalence_invariants(kSeed + 10, 200)); }
TEST(PolygonProperties, WitnessLatticePoints) { expect_holds(witness_maps_lattice_points(kSeed + 11, 200)); }
TEST(PolygonProperties, HullCommutation) { expect_holds(hull_commutation(kSeed + 12, 300)); }
TEST(PolygonProperties, PickMatchesScan) { expect_holds(pick_matches_scan(kSeed + 13, 300)); }

TEST(SurfaceProperties, DiscriminantSign) { expect_holds(discriminant_sign_of_b(kSeed + 14, 200)); }
TEST(SurfaceProperties, JDenominator) { expect_holds(j_denominator_is_discriminant(kSeed + 15, 200)); }
TEST(SurfaceProperties, FiberOrder) { expect_holds(fiber_order_invariance(kSeed + 16, 200)); }
