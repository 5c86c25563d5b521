#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rlra/core/jacobi.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/core/rng.hpp"

namespace {

using rlra::DenseMatrix;
using rlra::RngState;

TEST(Norms, IdentityFour) {
    DenseMatrix i4 = DenseMatrix::identity(4);
    EXPECT_DOUBLE_EQ(rlra::frobenius_norm(i4), 2.0);
    RngState rng(1);
    EXPECT_NEAR(rlra::spectral_norm_est(i4, 100, rng), 1.0, 1e-12);
}

TEST(Norms, DiagThreeFour) {
    DenseMatrix a{{3.0, 0.0}, {0.0, 4.0}};
    EXPECT_DOUBLE_EQ(rlra::frobenius_norm(a), 5.0);
    RngState rng(2);
    EXPECT_NEAR(rlra::spectral_norm_est(a, 100, rng), 4.0, 1e-8);
}

TEST(Norms, SpectralEstimateWithinOnePercentOfJacobi) {
    std::mt19937_64 gen(3);
    DenseMatrix a = oracle::random_matrix(50, 50, gen);
    const double sigma1 = rlra::small_svd(a).sigma[0];
    RngState rng(4);
    const double est = rlra::spectral_norm_est(a, 100, rng);
    EXPECT_NEAR(est, sigma1, 0.01 * sigma1);
}

TEST(Norms, CompensatedSummationHoldsUpOnManyTerms) {
    // 10^6 equal squares; naive accumulation drifts, compensated stays exact.
    DenseMatrix a(1000, 1000);
    for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] = 1e-3;
    EXPECT_NEAR(rlra::frobenius_norm(a), 1.0, 1e-12);
}

TEST(Norms, SpectralIterationFloorEnforced) {
    DenseMatrix a = DenseMatrix::identity(3);
    RngState rng(5);
    EXPECT_THROW(rlra::spectral_norm_est(a, 19, rng), rlra::DimensionError);
}

TEST(Norms, ColumnNorm) {
    DenseMatrix a{{3.0, 1.0}, {4.0, 2.0}};
    EXPECT_DOUBLE_EQ(rlra::column_norm(a, 0), 5.0);
    EXPECT_NEAR(rlra::column_norm(a, 1), std::sqrt(5.0), 1e-15);
}

}  // namespace
