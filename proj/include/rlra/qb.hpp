#pragma once

// Adaptive-rank QB factorizations: single-vector, blocked with tolerance
// stopping, an approximate parallel-friendly variant, and a hierarchical
// row-block composition. All tolerances are absolute Frobenius norms.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rlra/core/errors.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/core/rng.hpp"
#include "rlra/rsvd.hpp"

namespace rlra {

struct ResidualReport {
    double final_residual = 0.0;
    // One entry per appended block/column: the Frobenius norm of the working
    // residual after that step (parallel/hierarchical report a single final
    // dense recomputation instead).
    std::vector<double> history;
    // False only when a positive tolerance was requested and not met.
    bool tolerance_reached = true;
};

struct QbFactors {
    DenseMatrix q;  // m x ell, orthonormal columns
    DenseMatrix b;  // ell x n
    int ell = 0;
    ResidualReport residual_report;
};

// One column at a time: draw a Gaussian probe of the current residual,
// orthogonalize against what is already captured, append, deflate. Stops when
// the residual drops below tol or max_rank columns have been taken; a missed
// tolerance is flagged in the report, not an error.
inline QbFactors qb_single(const DenseMatrix& a, double tol, int max_rank, RngState& rng) {
    if (tol <= 0.0)
        throw DimensionError(detail::msg("qb_single needs tol > 0 (got %g)", tol));
    const int m = a.rows();
    const int n = a.cols();
    const int rmax = std::min(m, n);
    if (max_rank < 1 || max_rank > rmax)
        throw DimensionError(detail::msg("max_rank %d outside [1, min(m,n) = %d]", max_rank, rmax));
    DenseMatrix r = a;  // residual working copy
    QbFactors out;
    out.q = DenseMatrix(m, 0);
    out.b = DenseMatrix(0, n);
    double resid = frobenius_norm(r);
    bool reached = false;
    while (true) {
        if (resid < tol) {
            reached = true;
            break;
        }
        if (out.ell >= max_rank) break;
        DenseMatrix y;
        double ynorm = 0.0;
        int tries = 0;
        while (true) {
            DenseMatrix omega = gaussian_matrix(n, 1, rng);
            y = matmul(r, omega);
            if (out.ell > 0)
                y = subtract(y, matmul(out.q, matmul(out.q, y, true, false)));
            ynorm = frobenius_norm(y);
            if (ynorm >= 1e-14 * resid) break;
            if (++tries >= 64)
                throw NumericalError(detail::msg(
                    "qb_single: no new direction found in 64 draws (residual %g)", resid));
        }
        std::vector<double> inv{1.0 / ynorm};
        scale_columns_inplace(y, inv);
        DenseMatrix bj = matmul(y, r, true, false);
        out.q = hconcat(out.q, y);
        out.b = vconcat(out.b, bj);
        ++out.ell;
        r = subtract(r, matmul(y, bj));
        resid = frobenius_norm(r);
        out.residual_report.history.push_back(resid);
    }
    out.residual_report.final_residual = resid;
    out.residual_report.tolerance_reached = reached;
    return out;
}

// Blocked QB on a working copy that this routine destroys: sample b columns
// of the current residual (power-iterated against the residual itself),
// re-orthogonalize against the accumulated basis every reorth_period blocks,
// append, deflate, and stop once the residual norm falls below tol. tol = 0
// disables the stopping test and runs all M blocks (fixed-rank mode). Block
// widths shrink automatically when b*M would pass min(m,n).
inline QbFactors qb_blocked_inplace(DenseMatrix& w, int b, int num_blocks, double tol,
                                    int q_power, int reorth_period, RngState& rng) {
    if (b < 1) throw DimensionError(detail::msg("block size b must be >= 1 (got %d)", b));
    if (num_blocks < 1)
        throw DimensionError(detail::msg("block count M must be >= 1 (got %d)", num_blocks));
    if (tol < 0.0) throw DimensionError(detail::msg("tol must be >= 0 (got %g)", tol));
    if (q_power < 0)
        throw DimensionError(detail::msg("power iteration count must be >= 0 (got %d)", q_power));
    if (reorth_period < 1)
        throw DimensionError(detail::msg("reorth_period must be >= 1 (got %d)", reorth_period));
    const int m = w.rows();
    const int n = w.cols();
    const int rmax = std::min(m, n);
    QbFactors out;
    out.q = DenseMatrix(m, 0);
    out.b = DenseMatrix(0, n);
    bool reached = false;
    double resid = frobenius_norm(w);
    for (int i = 1; i <= num_blocks; ++i) {
        const int width = std::min(b, rmax - out.ell);
        if (width < 1) break;  // rank budget exhausted
        RngState block_rng = rng.substream();
        DenseMatrix omega = gaussian_matrix(n, width, block_rng);
        DenseMatrix qi = orth(matmul(w, omega));
        for (int j = 0; j < q_power; ++j) {
            qi = orth(matmul(w, qi, true, false));
            qi = orth(matmul(w, qi));
        }
        if (i % reorth_period == 0) {
            if (out.ell > 0)
                qi = subtract(qi, matmul(out.q, matmul(out.q, qi, true, false)));
            qi = orth(qi);
        }
        DenseMatrix bi = matmul(qi, w, true, false);
        out.q = hconcat(out.q, qi);
        out.b = vconcat(out.b, bi);
        out.ell += width;
        w = subtract(w, matmul(qi, bi));
        resid = frobenius_norm(w);
        out.residual_report.history.push_back(resid);
        if (tol > 0.0 && resid < tol) {
            reached = true;
            break;
        }
    }
    out.residual_report.final_residual = resid;
    out.residual_report.tolerance_reached = (tol > 0.0) ? reached : true;
    return out;
}

inline QbFactors qb_blocked(const DenseMatrix& a, int b, int num_blocks, double tol,
                            int q_power, int reorth_period, RngState& rng) {
    DenseMatrix w = a;
    return qb_blocked_inplace(w, b, num_blocks, tol, q_power, reorth_period, rng);
}

// Approximate parallel-friendly variant: every block samples the ORIGINAL
// matrix independently (each block owns an RNG substream, so the sampling
// loop may run concurrently), then blocks are projected against each other
// sequentially. No deflation, no tolerance mode; the basis quality is
// slightly looser than the blocked routine's.
inline QbFactors qb_parallel(const DenseMatrix& a, int b, int num_blocks, int q_power,
                             RngState& rng) {
    if (b < 1) throw DimensionError(detail::msg("block size b must be >= 1 (got %d)", b));
    if (num_blocks < 1)
        throw DimensionError(detail::msg("block count M must be >= 1 (got %d)", num_blocks));
    if (q_power < 0)
        throw DimensionError(detail::msg("power iteration count must be >= 0 (got %d)", q_power));
    const int m = a.rows();
    const int n = a.cols();
    const int rmax = std::min(m, n);
    if (b * num_blocks > rmax)
        throw DimensionError(detail::msg("b*M = %d exceeds min(m,n) = %d", b * num_blocks, rmax));
    std::vector<RngState> streams;
    streams.reserve(static_cast<std::size_t>(num_blocks));
    for (int i = 0; i < num_blocks; ++i) streams.push_back(rng.substream());
    // Independent sampling loop (parallelizable).
    std::vector<DenseMatrix> y(static_cast<std::size_t>(num_blocks));
    for (int i = 0; i < num_blocks; ++i) {
        DenseMatrix omega = gaussian_matrix(n, b, streams[static_cast<std::size_t>(i)]);
        y[i] = matmul(a, omega);
        for (int j = 0; j < q_power; ++j) {
            DenseMatrix qi = orth(y[i]);
            y[i] = matmul(a, qi, true, false);
            qi = orth(y[i]);
            y[i] = matmul(a, qi);
        }
    }
    // Independent per-block orthonormalization.
    std::vector<DenseMatrix> blocks(static_cast<std::size_t>(num_blocks));
    for (int i = 0; i < num_blocks; ++i) blocks[i] = orth(y[i]);
    // Sequential cross-block projection and concatenation.
    QbFactors out;
    out.q = DenseMatrix(m, 0);
    for (int i = 0; i < num_blocks; ++i) {
        DenseMatrix qi = std::move(blocks[static_cast<std::size_t>(i)]);
        if (out.q.cols() > 0)
            qi = subtract(qi, matmul(out.q, matmul(out.q, qi, true, false)));
        qi = orth(qi);
        out.q = hconcat(out.q, qi);
    }
    out.b = matmul(out.q, a, true, false);
    out.ell = b * num_blocks;
    const double resid = frobenius_norm(subtract(a, matmul(out.q, out.b)));
    out.residual_report.final_residual = resid;
    out.residual_report.history.push_back(resid);
    return out;
}

// Hierarchical row-block composition: factor each horizontal slab of A
// independently (parallelizable; one substream per leaf), then merge pairs of
// stacked B factors with fixed-rank QB up a binary tree, lifting Q through
// the block-diagonal stages. Every level works at rank b*M.
inline QbFactors qb_hierarchical(const DenseMatrix& a, int num_row_blocks, int b,
                                 int num_blocks, int q_power, RngState& rng) {
    const int blocks = num_row_blocks;
    if (blocks < 2 || (blocks & (blocks - 1)) != 0)
        throw DimensionError(
            detail::msg("num_row_blocks must be one of {2,4,8,...} (got %d)", blocks));
    const int m = a.rows();
    const int n = a.cols();
    const int base = m / blocks;
    if (base < 1)
        throw DimensionError(detail::msg("num_row_blocks %d exceeds row count %d", blocks, m));
    const int rank = b * num_blocks;
    if (rank > std::min(base, n))
        throw DimensionError(detail::msg(
            "leaf rank b*M = %d exceeds the smallest row block (%d x %d)", rank, base, n));
    std::vector<RngState> leaf_rng;
    leaf_rng.reserve(static_cast<std::size_t>(blocks));
    for (int t = 0; t < blocks; ++t) leaf_rng.push_back(rng.substream());
    struct Node {
        DenseMatrix q;
        DenseMatrix b;
    };
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(blocks));
    int row0 = 0;
    for (int t = 0; t < blocks; ++t) {
        const int rows_t = (t == blocks - 1) ? m - row0 : base;
        DenseMatrix slab = submatrix(a, row0, rows_t, 0, n);
        row0 += rows_t;
        QbFactors leaf =
            qb_blocked(slab, b, num_blocks, 0.0, q_power, 1, leaf_rng[static_cast<std::size_t>(t)]);
        nodes.push_back(Node{std::move(leaf.q), std::move(leaf.b)});
    }
    while (nodes.size() > 1) {
        std::vector<Node> next;
        next.reserve(nodes.size() / 2);
        for (std::size_t t = 0; t + 1 < nodes.size(); t += 2) {
            RngState merge_rng = rng.substream();
            const Node& left = nodes[t];
            const Node& right = nodes[t + 1];
            DenseMatrix stacked = vconcat(left.b, right.b);
            QbFactors mid = qb_blocked(stacked, b, num_blocks, 0.0, q_power, 1, merge_rng);
            const int top_rows = left.b.rows();
            DenseMatrix q_top = submatrix(mid.q, 0, top_rows, 0, mid.ell);
            DenseMatrix q_bot = submatrix(mid.q, top_rows, stacked.rows() - top_rows, 0, mid.ell);
            Node merged;
            merged.q = vconcat(matmul(left.q, q_top), matmul(right.q, q_bot));
            merged.b = std::move(mid.b);
            next.push_back(std::move(merged));
        }
        nodes = std::move(next);
    }
    QbFactors out;
    out.q = std::move(nodes[0].q);
    out.b = std::move(nodes[0].b);
    out.ell = out.q.cols();
    const double resid = frobenius_norm(subtract(a, matmul(out.q, out.b)));
    out.residual_report.final_residual = resid;
    out.residual_report.history.push_back(resid);
    return out;
}

// Rotate a QB factorization into SVD form without touching A again. k = 0
// keeps every captured direction; vnum picks the finishing method (kBbt forms
// B*B^T, kQr factors B^T).
inline SvdFactors svd_from_qb(const QbFactors& qb, int k, Vnum vnum) {
    if (k < 0 || k > qb.ell)
        throw DimensionError(detail::msg("rank k = %d outside [0, rank(B) = %d]", k, qb.ell));
    if (k == 0) k = qb.ell;
    if (k == 0) {
        SvdFactors out;
        out.u = DenseMatrix(qb.q.rows(), 0);
        out.v = DenseMatrix(qb.b.cols(), 0);
        return out;
    }
    return vnum == Vnum::kBbt ? detail::finish_qb_bbt(qb.q, qb.b, k)
                              : detail::finish_qb_qr(qb.q, qb.b, k);
}

}  // namespace rlra
