#include <gtest/gtest.h>

#include "rlra/core/matrix.hpp"

namespace {

using rlra::DenseMatrix;
using rlra::Permutation;

TEST(Matrix, InitializerListAndAccess) {
    DenseMatrix a{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    EXPECT_EQ(a.rows(), 2);
    EXPECT_EQ(a.cols(), 3);
    EXPECT_EQ(a(0, 0), 1.0);
    EXPECT_EQ(a(1, 2), 6.0);
    // Column-major layout: (i,j) at data[i + j*rows].
    EXPECT_EQ(a.data()[0], 1.0);
    EXPECT_EQ(a.data()[1], 4.0);
    EXPECT_EQ(a.data()[2], 2.0);
}

TEST(Matrix, TransposeInvolution) {
    DenseMatrix a{{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
    DenseMatrix tt = rlra::transpose(rlra::transpose(a));
    EXPECT_EQ(rlra::max_abs_diff(a, tt), 0.0);
}

TEST(Matrix, ShapeErrorsNameBothShapes) {
    DenseMatrix a(2, 3);
    DenseMatrix b(3, 2);
    try {
        rlra::subtract(a, b);
        FAIL() << "expected DimensionError";
    } catch (const rlra::DimensionError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("2x3"), std::string::npos) << what;
        EXPECT_NE(what.find("3x2"), std::string::npos) << what;
    }
}

TEST(Matrix, SubmatrixAndConcat) {
    DenseMatrix a{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    DenseMatrix block = rlra::submatrix(a, 0, 2, 1, 2);
    EXPECT_EQ(block.rows(), 2);
    EXPECT_EQ(block.cols(), 2);
    EXPECT_EQ(block(0, 0), 2.0);
    EXPECT_EQ(block(1, 1), 6.0);

    DenseMatrix left{{1.0}, {2.0}};
    DenseMatrix right{{3.0}, {4.0}};
    DenseMatrix wide = rlra::hconcat(left, right);
    EXPECT_EQ(wide.cols(), 2);
    EXPECT_EQ(wide(1, 1), 4.0);
    DenseMatrix tall = rlra::vconcat(rlra::transpose(left), rlra::transpose(right));
    EXPECT_EQ(tall.rows(), 2);
    EXPECT_EQ(tall(1, 1), 4.0);

    EXPECT_THROW(rlra::submatrix(a, 1, 2, 0, 1), rlra::DimensionError);
}

TEST(Permutation, ValidatesBijection) {
    EXPECT_NO_THROW(Permutation({2, 0, 1}));
    EXPECT_THROW(Permutation({0, 0, 1}), rlra::DimensionError);  // duplicate
    EXPECT_THROW(Permutation({0, 3, 1}), rlra::DimensionError);  // out of range
    EXPECT_THROW(Permutation({-1, 1, 0}), rlra::DimensionError);
}

TEST(Permutation, ApplyThenInvertIsIdentity) {
    DenseMatrix a{{1.0, 2.0, 3.0, 4.0}, {5.0, 6.0, 7.0, 8.0}};
    Permutation p({2, 0, 3, 1});
    DenseMatrix shuffled = rlra::select_columns(a, p, 4);
    // Invert: position j of the shuffle holds original column p[j].
    std::vector<int> inv(4);
    for (int j = 0; j < 4; ++j) inv[p[j]] = j;
    DenseMatrix restored = rlra::select_columns(shuffled, Permutation(inv), 4);
    EXPECT_EQ(rlra::max_abs_diff(a, restored), 0.0);
}

TEST(Matrix, SelectRowsMatchesTransposedColumnSelect) {
    DenseMatrix a{{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
    Permutation p({2, 0, 1});
    DenseMatrix direct = rlra::select_rows(a, p, 2);
    DenseMatrix via_t = rlra::transpose(rlra::select_columns(rlra::transpose(a), p, 2));
    EXPECT_EQ(rlra::max_abs_diff(direct, via_t), 0.0);
}

}  // namespace
