#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "rlra/core/jacobi.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/sketch.hpp"
#include "rlra/testmat.hpp"

namespace {

using rlra::DenseMatrix;
using rlra::RngState;

// Spectral norm of A - Q Q^T A for Q = orth(sample).
double range_capture_error(const DenseMatrix& a, const DenseMatrix& sample, std::uint64_t est_seed) {
    DenseMatrix q = rlra::orth(sample);
    DenseMatrix residual = rlra::subtract(a, rlra::matmul(q, rlra::matmul(q, a, true, false)));
    RngState rng(est_seed);
    return rlra::spectral_norm_est(residual, 100, rng);
}

TEST(SampleRight, NoPowerCaseIsPlainSketch) {
    RngState gen_rng(101);
    rlra::TestMatrix tm = rlra::gen_test_matrix(40, 30, rlra::SpectrumSpec::type_i(), gen_rng);
    RngState r1(55);
    DenseMatrix y = rlra::sample_right(tm.a, 8, 0, 1, r1);
    RngState r2(55);
    DenseMatrix want = rlra::matmul(tm.a, rlra::gaussian_matrix(30, 8, r2));
    EXPECT_EQ(rlra::max_abs_diff(y, want), 0.0);  // bitwise
}

TEST(SampleRight, PowerIterationSharpensRangeCapture) {
    RngState gen_rng(102);
    rlra::TestMatrix tm = rlra::gen_test_matrix(80, 60, rlra::SpectrumSpec::type_i(), gen_rng);
    RngState r_q0(77);
    const double err_q0 = range_capture_error(tm.a, rlra::sample_right(tm.a, 15, 0, 1, r_q0), 7);
    RngState r_q1(77);  // same sketch seed
    const double err_q1 = range_capture_error(tm.a, rlra::sample_right(tm.a, 15, 1, 1, r_q1), 7);
    EXPECT_LT(err_q1, err_q0);
}

TEST(SampleRight, OrthonormalInputDegenerateSpectrum) {
    RngState gen_rng(103);
    DenseMatrix a = rlra::orth(rlra::gaussian_matrix(30, 30, gen_rng));
    RngState rng(9);
    DenseMatrix y = rlra::sample_right(a, 10, 2, 1, rng);
    // All singular directions are equivalent; just confirm the sample yields a
    // clean orthonormal basis.
    EXPECT_LE(oracle::orthonormality_defect(rlra::orth(y)), 1e-12);
}

TEST(SampleRight, WidthAndParameterGuards) {
    DenseMatrix a(20, 10);
    RngState rng(1);
    EXPECT_THROW(rlra::sample_right(a, 11, 0, 1, rng), rlra::DimensionError);
    EXPECT_THROW(rlra::sample_right(a, 0, 0, 1, rng), rlra::DimensionError);
    EXPECT_THROW(rlra::sample_right(a, 5, -1, 1, rng), rlra::DimensionError);
    EXPECT_THROW(rlra::sample_right(a, 5, 1, 0, rng), rlra::DimensionError);
}

TEST(SampleLeft, NoPowerCaseIsRowSketch) {
    RngState gen_rng(104);
    rlra::TestMatrix tm = rlra::gen_test_matrix(25, 35, rlra::SpectrumSpec::type_ii(), gen_rng);
    RngState r1(66);
    DenseMatrix y = rlra::sample_left(tm.a, 6, 0, 1, r1);
    EXPECT_EQ(y.rows(), 6);
    EXPECT_EQ(y.cols(), 35);
    // Omega~ A with Omega~ = G^T for the same G the mirrored sampler draws.
    RngState r2(66);
    DenseMatrix g = rlra::gaussian_matrix(25, 6, r2);
    DenseMatrix want = rlra::matmul(g, tm.a, true, false);
    EXPECT_EQ(rlra::max_abs_diff(y, want), 0.0);
}

TEST(SampleLeft, TransposeDualityHoldsBitwise) {
    RngState gen_rng(105);
    rlra::TestMatrix tm = rlra::gen_test_matrix(45, 30, rlra::SpectrumSpec::type_ii(), gen_rng);
    RngState r1(88);
    DenseMatrix left = rlra::sample_left(tm.a, 7, 2, 2, r1);
    RngState r2(88);
    DenseMatrix right_t = rlra::transpose(rlra::sample_right(rlra::transpose(tm.a), 7, 2, 2, r2));
    EXPECT_EQ(rlra::max_abs_diff(left, right_t), 0.0);
}

// With a gapped spectrum the powered row sample pins down the leading right
// singular subspace almost exactly.
TEST(SampleLeft, CapturesLeadingRightSingularSubspace) {
    std::vector<double> exps(80, -3.0);
    for (int j = 0; j < 10; ++j) exps[j] = -0.05 * j / 9.0;
    RngState gen_rng(106);
    rlra::TestMatrix tm = rlra::gen_test_matrix(100, 80, rlra::SpectrumSpec::custom(exps), gen_rng);
    RngState rng(10);
    DenseMatrix y = rlra::sample_left(tm.a, 15, 2, 1, rng);
    DenseMatrix qy = rlra::orth(rlra::transpose(y));  // 80 x 15 row-space basis
    rlra::SvdFactors ref = rlra::small_svd(tm.a);     // Jacobi subspace oracle
    DenseMatrix v10(80, 10);
    for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 80; ++i) v10(i, j) = ref.v(i, j);
    // Cosines of the principal angles are the singular values of Qy^T V10.
    rlra::SvdFactors angles = rlra::small_svd(rlra::matmul(qy, v10, true, false));
    const double cos_worst = std::min(1.0, angles.sigma.back());
    EXPECT_LE(std::acos(cos_worst), 1e-3);
}

// (A A^T)^q A has singular values sigma^(2q+1): checked densely on synthetic
// spectra for q = 1, 2.
TEST(Sketch, PowerSchemeSpectrumLaw) {
    RngState gen_rng(107);
    rlra::TestMatrix tm = rlra::gen_test_matrix(50, 40, rlra::SpectrumSpec::type_i(), gen_rng);
    for (int q = 1; q <= 2; ++q) {
        DenseMatrix powered = tm.a;
        for (int i = 0; i < q; ++i)
            powered = rlra::matmul(tm.a, rlra::matmul(tm.a, powered, true, false));
        rlra::SvdFactors f = rlra::small_svd(powered);
        for (int j = 0; j < 40; ++j) {
            const double want = std::pow(tm.sigma_true[j], 2 * q + 1);
            EXPECT_NEAR(f.sigma[j], want, 1e-9 * want) << "q=" << q << " j=" << j;
        }
    }
}

// Gaussian row sketches preserve column norms in expectation: the squared
// ratio follows chi-square(l), so over 2000 trials the mean sits near l and
// the variance near 2l.
TEST(Sketch, ColumnNormPreservationStatistics) {
    const int l = 20;
    const int m = 30;
    const int trials = 2000;
    RngState gen_rng(108);
    DenseMatrix a = rlra::gaussian_matrix(m, 1, gen_rng);
    double a2 = 0.0;
    for (int i = 0; i < m; ++i) a2 += a(i, 0) * a(i, 0);
    RngState rng(2718);
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < trials; ++t) {
        DenseMatrix omega = rlra::gaussian_matrix(l, m, rng);
        DenseMatrix y = rlra::matmul(omega, a);
        double y2 = 0.0;
        for (int i = 0; i < l; ++i) y2 += y(i, 0) * y(i, 0);
        const double ratio = y2 / a2;
        sum += ratio;
        sumsq += ratio * ratio;
    }
    const double mean = sum / trials;
    const double var = sumsq / trials - mean * mean;
    EXPECT_NEAR(mean, static_cast<double>(l), 4.0 * std::sqrt(2.0 * l / trials));
    EXPECT_NEAR(var, 2.0 * l, 0.15 * 2.0 * l);
}

TEST(Sketch, SeedDeterminismEndToEnd) {
    RngState gen_rng(109);
    rlra::TestMatrix tm = rlra::gen_test_matrix(30, 25, rlra::SpectrumSpec::type_iii(), gen_rng);
    RngState r1(4242);
    RngState r2(4242);
    DenseMatrix y1 = rlra::sample_right(tm.a, 9, 2, 1, r1);
    DenseMatrix y2 = rlra::sample_right(tm.a, 9, 2, 1, r2);
    EXPECT_EQ(rlra::max_abs_diff(y1, y2), 0.0);
}

TEST(SketchParams, DefaultsAndValidation) {
    rlra::SketchParams params;
    EXPECT_EQ(params.p, 5);
    EXPECT_EQ(params.q, 1);
    EXPECT_EQ(params.s, 1);
    params.k = 10;
    EXPECT_NO_THROW(params.validate(100, 50));
    params.tol = 0.5;  // both modes set
    EXPECT_THROW(params.validate(100, 50), rlra::DimensionError);
    params.k = 0;      // tolerance mode alone is fine
    EXPECT_NO_THROW(params.validate(100, 50));
    params.tol = 0.0;  // neither mode
    EXPECT_THROW(params.validate(100, 50), rlra::DimensionError);
    params.k = 48;     // k+p = 53 > min(m,n) = 50
    EXPECT_THROW(params.validate(100, 50), rlra::DimensionError);
}

}  // namespace
