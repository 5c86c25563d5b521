#pragma once

// Low-rank SVD construction: a dense truncated oracle, the basic randomized
// SVD, and two finishing variants that never form the full SVD of A — one via
// an eigendecomposition of B B^T, one via a QR factorization of B^T.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rlra/core/errors.hpp"
#include "rlra/core/jacobi.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/sketch.hpp"

namespace rlra {

namespace detail {

inline SvdFactors truncate_svd(const SvdFactors& f, int k) {
    if (k < 0 || k > f.k)
        throw DimensionError(msg("truncation rank %d outside [0, %d]", k, f.k));
    SvdFactors out;
    out.k = k;
    out.u = submatrix(f.u, 0, f.u.rows(), 0, k);
    out.v = submatrix(f.v, 0, f.v.rows(), 0, k);
    out.sigma.assign(f.sigma.begin(), f.sigma.begin() + k);
    return out;
}

inline void check_sample_rank(int k, int p, int m, int n) {
    if (k < 1) throw DimensionError(msg("rank k must be >= 1 (got %d)", k));
    if (p < 0) throw DimensionError(msg("oversampling p must be >= 0 (got %d)", p));
    const int r = std::min(m, n);
    if (k + p > r)
        throw DimensionError(msg("k + p = %d exceeds min(m,n) = %d", k + p, r));
}

// Finish a QB factorization through the l x l Gram matrix T = B B^T: its
// eigenpairs give Sigma = sqrt(d), U = Q*Uhat, V = B^T*Uhat*Sigma^{-1}.
// Squaring B squares its condition number, so tiny singular values drown; the
// guard rejects eigenvalues below 1e-28 * d_max (machine-epsilon-squared
// scale) rather than returning garbage factors.
inline SvdFactors finish_qb_bbt(const DenseMatrix& q, const DenseMatrix& b, int k) {
    const int l = b.rows();
    if (k < 1 || k > l)
        throw DimensionError(msg("rank k = %d outside [1, %d]", k, l));
    SymEig eig = sym_eig(matmul(b, b, false, true));
    const double d_max = eig.values[0];
    std::vector<double> inv_sigma(k);
    SvdFactors out;
    out.k = k;
    out.sigma.resize(k);
    for (int i = 0; i < k; ++i) {
        const double d = eig.values[i];
        if (d <= 0.0 || d < 1e-28 * d_max)
            throw NumericalError(msg(
                "rank k exceeds numerical rank for v1; use v2 "
                "(eigenvalue %.3e at index %d vs max %.3e)",
                d, i, d_max));
        out.sigma[i] = std::sqrt(d);
        inv_sigma[i] = 1.0 / out.sigma[i];
    }
    DenseMatrix uhat_k = submatrix(eig.vectors, 0, l, 0, k);
    out.u = matmul(q, uhat_k);
    out.v = matmul(b, uhat_k, true, false);
    scale_columns_inplace(out.v, inv_sigma);
    return out;
}

// Finish from B^T directly (n x l): B^T = Qhat*Rhat, then the small SVD of
// Rhat rotates into U = (Q*Vhat)(:,1:k), V = (Qhat*Uhat)(:,1:k).
inline SvdFactors finish_qb_qr_bt(const DenseMatrix& q, const DenseMatrix& bt, int k) {
    const int l = bt.cols();
    if (k < 1 || k > l)
        throw DimensionError(msg("rank k = %d outside [1, %d]", k, l));
    QrFactors f = compact_qr(bt);
    SvdFactors rf = small_svd(f.r);
    SvdFactors out;
    out.k = k;
    out.u = submatrix(matmul(q, rf.v), 0, q.rows(), 0, k);
    out.v = submatrix(matmul(f.q, rf.u), 0, bt.rows(), 0, k);
    out.sigma.assign(rf.sigma.begin(), rf.sigma.begin() + k);
    return out;
}

inline SvdFactors finish_qb_qr(const DenseMatrix& q, const DenseMatrix& b, int k) {
    return finish_qb_qr_bt(q, transpose(b), k);
}

}  // namespace detail

// Dense truncated SVD, rank mode (k >= 1, tol == 0) or tolerance mode
// (k == 0, tol > 0); in tolerance mode k is the smallest count with
// sigma_{k+1} < tol (all of them if none falls below).
inline SvdFactors svd_truncated(const DenseMatrix& a, int k, double tol = 0.0) {
    const int r = std::min(a.rows(), a.cols());
    const bool rank_mode = k >= 1 && tol == 0.0;
    const bool tol_mode = k == 0 && tol > 0.0;
    if (!rank_mode && !tol_mode)
        throw DimensionError(detail::msg(
            "exactly one of rank k >= 1 or tol > 0 must be set (got k=%d, tol=%g)", k, tol));
    if (rank_mode && k > r)
        throw DimensionError(detail::msg("rank %d exceeds min(m,n) = %d", k, r));
    if (r > 2000)
        throw DimensionError(detail::msg(
            "min(m,n) = %d exceeds the dense SVD limit of 2000; "
            "use the randomized routines for matrices this large", r));
    SvdFactors full = small_svd(a);
    int keep = k;
    if (tol_mode) {
        keep = r;
        for (int i = 0; i < r; ++i) {
            if (full.sigma[i] < tol) {
                keep = i;
                break;
            }
        }
    }
    return detail::truncate_svd(full, keep);
}

// Basic randomized SVD: Y = A*G, Q = orth(Y), B = Q^T*A, dense SVD of the
// small B, U = Q*Uhat, then drop the p oversampling terms.
inline SvdFactors rsvd_basic(const DenseMatrix& a, int k, int p, RngState& rng) {
    detail::check_sample_rank(k, p, a.rows(), a.cols());
    const int l = k + p;
    DenseMatrix g = gaussian_matrix(a.cols(), l, rng);
    DenseMatrix q = orth(matmul(a, g));
    DenseMatrix b = matmul(q, a, true, false);
    SvdFactors bf = small_svd(b);
    SvdFactors out;
    out.k = k;
    out.u = submatrix(matmul(q, bf.u), 0, a.rows(), 0, k);
    out.v = submatrix(bf.v, 0, a.cols(), 0, k);
    out.sigma.assign(bf.sigma.begin(), bf.sigma.begin() + k);
    return out;
}

// Version I: power-scheme sample, then the B*B^T eigendecomposition finish.
// Fast, but squares the condition number of B; see finish_qb_bbt's guard.
inline SvdFactors rsvd_v1(const DenseMatrix& a, int k, int p, int q_power, int s,
                          RngState& rng) {
    detail::check_sample_rank(k, p, a.rows(), a.cols());
    DenseMatrix q = orth(sample_right(a, k + p, q_power, s, rng));
    DenseMatrix b = matmul(q, a, true, false);
    return detail::finish_qb_bbt(q, b, k);
}

// Version II: power-scheme sample, then the QR-of-B^T finish, which keeps
// the conditioning of B itself.
inline SvdFactors rsvd_v2(const DenseMatrix& a, int k, int p, int q_power, int s,
                          RngState& rng) {
    detail::check_sample_rank(k, p, a.rows(), a.cols());
    DenseMatrix q = orth(sample_right(a, k + p, q_power, s, rng));
    DenseMatrix bt = matmul(a, q, true, false);
    return detail::finish_qb_qr_bt(q, bt, k);
}

}  // namespace rlra
