#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/rng.hpp"

namespace {

using rlra::DenseMatrix;

TEST(Matmul, IdentityPassThrough) {
    std::mt19937_64 gen(1);
    DenseMatrix x = oracle::random_matrix(3, 7, gen);
    DenseMatrix got = rlra::matmul(DenseMatrix::identity(3), x);
    EXPECT_EQ(rlra::max_abs_diff(got, x), 0.0);
}

TEST(Matmul, HandArithmetic) {
    DenseMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    DenseMatrix b{{5.0}, {6.0}};
    DenseMatrix c = rlra::matmul(a, b);
    EXPECT_EQ(c.rows(), 2);
    EXPECT_EQ(c.cols(), 1);
    EXPECT_EQ(c(0, 0), 17.0);
    EXPECT_EQ(c(1, 0), 39.0);
}

TEST(Matmul, MatchesTripleLoopOracle) {
    std::mt19937_64 gen(42);
    DenseMatrix a = oracle::random_matrix(30, 20, gen);
    DenseMatrix b = oracle::random_matrix(20, 10, gen);
    DenseMatrix got = rlra::matmul(a, b);
    DenseMatrix want = oracle::matmul_triple_loop(a, b);
    double scale = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) scale = std::max(scale, std::abs(want.data()[i]));
    EXPECT_LE(rlra::max_abs_diff(got, want), 1e-13 * scale);
}

TEST(Matmul, TransposeFlagsMatchExplicitTransposes) {
    std::mt19937_64 gen(7);
    DenseMatrix a = oracle::random_matrix(12, 8, gen);
    DenseMatrix b = oracle::random_matrix(12, 9, gen);
    // A^T * B
    DenseMatrix want_tn = oracle::matmul_triple_loop(rlra::transpose(a), b);
    EXPECT_LE(rlra::max_abs_diff(rlra::matmul(a, b, true, false), want_tn), 1e-13);
    // A * B^T with compatible shapes
    DenseMatrix c = oracle::random_matrix(9, 8, gen);
    DenseMatrix want_nt = oracle::matmul_triple_loop(a, rlra::transpose(c));
    EXPECT_LE(rlra::max_abs_diff(rlra::matmul(a, c, false, true), want_nt), 1e-13);
    // A^T * C^T
    DenseMatrix d = oracle::random_matrix(5, 12, gen);
    DenseMatrix want_tt = oracle::matmul_triple_loop(rlra::transpose(a), rlra::transpose(d));
    EXPECT_LE(rlra::max_abs_diff(rlra::matmul(a, d, true, true), want_tt), 1e-13);
}

TEST(Matmul, MismatchNamesBothShapes) {
    DenseMatrix a(3, 4);
    DenseMatrix b(5, 2);
    try {
        rlra::matmul(a, b);
        FAIL() << "expected DimensionError";
    } catch (const rlra::DimensionError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("3x4"), std::string::npos) << what;
        EXPECT_NE(what.find("5x2"), std::string::npos) << what;
    }
}

// The parallel split over output columns keeps each element's reduction order,
// so multi-threaded runs are bit-identical to serial ones.
TEST(Matmul, ParallelMatchesSerialBitwise) {
    std::mt19937_64 gen(11);
    DenseMatrix a = oracle::random_matrix(60, 80, gen);
    DenseMatrix b = oracle::random_matrix(80, 50, gen);
    rlra::config::set_threads(1);
    DenseMatrix serial = rlra::matmul(a, b);
    DenseMatrix serial_tn = rlra::matmul(a, a, true, false);
    rlra::config::set_threads(3);
    DenseMatrix parallel = rlra::matmul(a, b);
    DenseMatrix parallel_tn = rlra::matmul(a, a, true, false);
    rlra::config::set_threads(1);
    EXPECT_EQ(rlra::max_abs_diff(serial, parallel), 0.0);
    EXPECT_EQ(rlra::max_abs_diff(serial_tn, parallel_tn), 0.0);
}

TEST(Matmul, RepeatedCallsBitIdentical) {
    std::mt19937_64 gen(13);
    DenseMatrix a = oracle::random_matrix(17, 23, gen);
    DenseMatrix b = oracle::random_matrix(23, 11, gen);
    EXPECT_EQ(rlra::max_abs_diff(rlra::matmul(a, b), rlra::matmul(a, b)), 0.0);
}

}  // namespace
