#include <gtest/gtest.h>

#include <cmath>

#include "rlra/core/rng.hpp"

namespace {

using rlra::DenseMatrix;
using rlra::RngState;

TEST(Rng, SameSeedSameMatrix) {
    RngState a(7);
    RngState b(7);
    DenseMatrix ga = rlra::gaussian_matrix(2, 2, a);
    DenseMatrix gb = rlra::gaussian_matrix(2, 2, b);
    EXPECT_EQ(rlra::max_abs_diff(ga, gb), 0.0);  // bit-identical
}

TEST(Rng, StreamAdvances) {
    RngState rng(7);
    DenseMatrix first = rlra::gaussian_matrix(2, 2, rng);
    DenseMatrix second = rlra::gaussian_matrix(2, 2, rng);
    EXPECT_GT(rlra::max_abs_diff(first, second), 0.0);
}

TEST(Rng, SingleDrawIsFinite) {
    RngState rng(123);
    DenseMatrix g = rlra::gaussian_matrix(1, 1, rng);
    EXPECT_TRUE(std::isfinite(g(0, 0)));
}

// Law-of-large-numbers sanity on 1e5 draws: mean within 4/sqrt(1e5) of 0,
// variance within 5% of 1.
TEST(Rng, GaussianMoments) {
    const int n = 100000;
    RngState rng(2024);
    double sum = 0.0;
    double sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_gaussian();
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    EXPECT_LT(std::abs(mean), 4.0 / std::sqrt(static_cast<double>(n)));
    EXPECT_NEAR(var, 1.0, 0.05);
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
    RngState a(99);
    RngState b(99);
    RngState a0 = a.substream();
    RngState a1 = a.substream();
    RngState b0 = b.substream();
    RngState b1 = b.substream();
    DenseMatrix ga0 = rlra::gaussian_matrix(3, 3, a0);
    DenseMatrix gb0 = rlra::gaussian_matrix(3, 3, b0);
    EXPECT_EQ(rlra::max_abs_diff(ga0, gb0), 0.0);
    DenseMatrix ga1 = rlra::gaussian_matrix(3, 3, a1);
    DenseMatrix gb1 = rlra::gaussian_matrix(3, 3, b1);
    EXPECT_EQ(rlra::max_abs_diff(ga1, gb1), 0.0);
    EXPECT_GT(rlra::max_abs_diff(ga0, ga1), 0.0);
}

TEST(Rng, ColumnMajorFillOrder) {
    // The matrix fill consumes the scalar stream column by column.
    RngState a(5);
    DenseMatrix g = rlra::gaussian_matrix(2, 2, a);
    RngState b(5);
    EXPECT_EQ(g(0, 0), b.next_gaussian());
    EXPECT_EQ(g(1, 0), b.next_gaussian());
    EXPECT_EQ(g(0, 1), b.next_gaussian());
    EXPECT_EQ(g(1, 1), b.next_gaussian());
}

}  // namespace
