#pragma once

#include <thread>
#include <vector>

#include "rlra/core/config.hpp"
#include "rlra/core/matrix.hpp"

namespace rlra {

namespace detail {

// Computes columns [j0,j1) of c = op(a)*op(b). The summation index always runs
// in ascending order, so the value of every c(i,j) is independent of how the
// column range is split across threads.
inline void matmul_columns(const DenseMatrix& a, const DenseMatrix& b, bool trans_a, bool trans_b,
                           DenseMatrix& c, int j0, int j1) {
    const int m = c.rows();
    const int inner = trans_a ? a.rows() : a.cols();
    if (!trans_a && !trans_b) {
        for (int j = j0; j < j1; ++j) {
            double* cj = c.col(j);
            const double* bj = b.col(j);
            for (int l = 0; l < inner; ++l) {
                const double blj = bj[l];
                const double* al = a.col(l);
                for (int i = 0; i < m; ++i) cj[i] += al[i] * blj;
            }
        }
    } else if (trans_a && !trans_b) {
        for (int j = j0; j < j1; ++j) {
            double* cj = c.col(j);
            const double* bj = b.col(j);
            for (int i = 0; i < m; ++i) {
                const double* ai = a.col(i);
                double sum = 0.0;
                for (int l = 0; l < inner; ++l) sum += ai[l] * bj[l];
                cj[i] = sum;
            }
        }
    } else if (!trans_a && trans_b) {
        for (int j = j0; j < j1; ++j) {
            double* cj = c.col(j);
            for (int l = 0; l < inner; ++l) {
                const double bjl = b(j, l);
                const double* al = a.col(l);
                for (int i = 0; i < m; ++i) cj[i] += al[i] * bjl;
            }
        }
    } else {
        for (int j = j0; j < j1; ++j) {
            double* cj = c.col(j);
            for (int i = 0; i < m; ++i) {
                const double* ai = a.col(i);
                double sum = 0.0;
                for (int l = 0; l < inner; ++l) sum += ai[l] * b(j, l);
                cj[i] = sum;
            }
        }
    }
}

}  // namespace detail

// c = op(a) * op(b) with op(x) = x or x^T. Deterministic: for a given shape the
// reduction order per output element is fixed, so serial and multi-threaded
// runs produce bit-identical results.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, bool trans_a = false,
                          bool trans_b = false) {
    const int m = trans_a ? a.cols() : a.rows();
    const int ka = trans_a ? a.rows() : a.cols();
    const int kb = trans_b ? b.cols() : b.rows();
    const int n = trans_b ? b.rows() : b.cols();
    if (ka != kb)
        throw DimensionError(detail::msg("matmul: inner dimensions disagree: op(%dx%d) * op(%dx%d)",
                                         a.rows(), a.cols(), b.rows(), b.cols()));
    DenseMatrix c(m, n);
    const int nthreads = config::threads();
    const double flops = 2.0 * m * static_cast<double>(n) * ka;
    if (nthreads <= 1 || n < 2 * nthreads || flops < 1e5) {
        detail::matmul_columns(a, b, trans_a, trans_b, c, 0, n);
        return c;
    }
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    const int chunk = (n + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const int j0 = t * chunk;
        const int j1 = std::min(n, j0 + chunk);
        if (j0 >= j1) break;
        workers.emplace_back([&, j0, j1] { detail::matmul_columns(a, b, trans_a, trans_b, c, j0, j1); });
    }
    for (auto& w : workers) w.join();
    return c;
}

}  // namespace rlra
