#pragma once

#include <cmath>

#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/rng.hpp"

namespace rlra {

namespace detail {

// Kahan-compensated sum of squares over a raw range.
inline double sum_squares(const double* p, std::size_t n) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double term = p[i] * p[i];
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace detail

inline double frobenius_norm(const DenseMatrix& a) {
    return std::sqrt(detail::sum_squares(a.data(), a.size()));
}

// Euclidean norm of column j of a.
inline double column_norm(const DenseMatrix& a, int j) {
    return std::sqrt(detail::sum_squares(a.col(j), static_cast<std::size_t>(a.rows())));
}

// Power-iteration estimate of the spectral norm (largest singular value).
// Runs `iters` rounds of v <- A^T A v on a random unit start vector; the
// estimate approaches sigma_1 from below. iters must be at least 20.
inline double spectral_norm_est(const DenseMatrix& a, int iters, RngState& rng) {
    if (iters < 20)
        throw DimensionError(detail::msg("spectral_norm_est: iters=%d, need >= 20", iters));
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    DenseMatrix v = gaussian_matrix(a.cols(), 1, rng);
    double sigma = 0.0;
    for (int it = 0; it < iters; ++it) {
        const double vn = frobenius_norm(v);
        if (vn == 0.0) return 0.0;  // start vector annihilated: A is zero on its span
        for (int i = 0; i < v.rows(); ++i) v(i, 0) /= vn;
        DenseMatrix w = matmul(a, v);
        sigma = frobenius_norm(w);
        v = matmul(a, w, /*trans_a=*/true);
    }
    return sigma;
}

}  // namespace rlra
