#pragma once

// Skeleton factorizations built on column-pivoted QR: one- and two-sided
// interpolative decompositions, CUR, and their randomized variants that
// pivot a small row sample instead of the full matrix.

#include <algorithm>
#include <cmath>
#include <utility>

#include "rlra/core/errors.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/qb.hpp"
#include "rlra/sketch.hpp"

namespace rlra {

struct IdFactors {
    Permutation jc;  // column permutation; the first k entries are the skeleton
    DenseMatrix v;   // n x k interpolation matrix; rows at jc(1:k) are exactly I_k
    int k = 0;
    double qr_residual = 0.0;  // ||S22||_F of the pivoted QR that chose the skeleton
    bool tolerance_reached = true;
    bool clamped = false;  // interpolation entries were capped at 1e4
};

struct RowIdFactors {
    Permutation jr;  // row permutation; skeleton prefix
    DenseMatrix w;   // m x k; rows at jr(1:k) are exactly I_k
    int k = 0;
    double qr_residual = 0.0;
    bool tolerance_reached = true;
    bool clamped = false;
};

struct TwoSidedIdFactors {
    Permutation jr;
    Permutation jc;
    DenseMatrix w;  // m x k
    DenseMatrix v;  // n x k
    int k = 0;
    double qr_residual = 0.0;  // from the column stage, which sets the error
    bool tolerance_reached = true;
};

struct CurFactors {
    DenseMatrix c;  // m x k, actual columns of A
    DenseMatrix u;  // k x k linkage
    DenseMatrix r;  // k x n, actual rows of A
    Permutation jr;
    Permutation jc;
    int k = 0;
    double residual = 0.0;  // ||A - CUR||_F, recomputed densely
    double qr_residual = 0.0;
    bool tolerance_reached = true;
};

namespace detail {

// V = P [I_k ; T^T]: identity rows on the skeleton, interpolation
// coefficients on the remaining columns' rows.
inline DenseMatrix build_interp_matrix(const Permutation& perm, const DenseMatrix& t,
                                       int n, int k) {
    DenseMatrix v(n, k);
    for (int i = 0; i < k; ++i) v(perm[i], i) = 1.0;
    for (int c = 0; c + k < n; ++c)
        for (int j = 0; j < k; ++j) v(perm[k + c], j) = t(j, c);
    return v;
}

inline IdFactors id_from_pivoted_qr(const PivotedQr& pqr, int n, double tol) {
    IdFactors out;
    out.jc = pqr.perm;
    out.k = pqr.frank;
    out.qr_residual = pqr.residual;
    out.tolerance_reached = (tol > 0.0) ? pqr.tolerance_reached : true;
    const int f = pqr.frank;
    if (f == 0) {
        out.v = DenseMatrix(n, 0);
        return out;
    }
    DenseMatrix s11 = submatrix(pqr.s1, 0, f, 0, f);
    DenseMatrix t(f, 0);
    if (n > f) {
        TriSolve ts = upper_tri_solve(s11, submatrix(pqr.s1, 0, f, f, n - f));
        out.clamped = ts.clamped;
        t = std::move(ts.t);
    }
    out.v = build_interp_matrix(pqr.perm, t, n, f);
    return out;
}

}  // namespace detail

// Column ID: pivoted QR selects k skeleton columns, the triangular solve
// expresses every other column in terms of them. Rank mode (k >= 1, tol == 0)
// or tolerance mode (k == 0, tol > 0), inherited from the pivoted QR.
inline IdFactors id_column(const DenseMatrix& a, int k, double tol = 0.0) {
    PivotedQr pqr = pivoted_qr_partial(a, k, tol);
    return detail::id_from_pivoted_qr(pqr, a.cols(), tol);
}

// Row ID is the column ID of A^T with the roles renamed: A ~ W * A(jr(1:k),:).
inline RowIdFactors id_row(const DenseMatrix& a, int k, double tol = 0.0) {
    IdFactors cid = id_column(transpose(a), k, tol);
    RowIdFactors out;
    out.jr = std::move(cid.jc);
    out.w = std::move(cid.v);
    out.k = cid.k;
    out.qr_residual = cid.qr_residual;
    out.tolerance_reached = cid.tolerance_reached;
    out.clamped = cid.clamped;
    return out;
}

namespace detail {

// Attach the row side to a finished column ID: a full-rank row ID of the
// skeleton columns C, which is exact because rank(C) <= k.
inline TwoSidedIdFactors two_sided_from_column(const DenseMatrix& a, IdFactors col) {
    TwoSidedIdFactors out;
    out.jc = std::move(col.jc);
    out.v = std::move(col.v);
    out.k = col.k;
    out.qr_residual = col.qr_residual;
    out.tolerance_reached = col.tolerance_reached;
    if (out.k == 0) {
        out.jr = Permutation::identity(a.rows());
        out.w = DenseMatrix(a.rows(), 0);
        return out;
    }
    DenseMatrix c = select_columns(a, out.jc, out.k);
    RowIdFactors row = id_row(c, out.k, 0.0);
    out.jr = std::move(row.jr);
    out.w = std::move(row.w);
    return out;
}

// Least-squares linkage U = argmin ||U R - V^T||_F via a compact QR of R^T.
inline DenseMatrix cur_linkage(const DenseMatrix& r, const DenseMatrix& v,
                               const Permutation& jr) {
    QrFactors f = compact_qr(transpose(r));
    const int k = r.rows();
    double dmax = 0.0;
    for (int i = 0; i < k; ++i) dmax = std::max(dmax, std::abs(f.r(i, i)));
    for (int i = 0; i < k; ++i)
        if (dmax == 0.0 || std::abs(f.r(i, i)) < 1e-13 * dmax)
            throw NumericalError(msg(
                "CUR linkage: skeleton row %d makes R rank-deficient to working precision",
                jr[i]));
    TriSolve ts = upper_tri_solve(f.r, matmul(f.q, v, true, false));
    return transpose(ts.t);
}

inline CurFactors cur_from_two_sided(const DenseMatrix& a, const TwoSidedIdFactors& ts) {
    CurFactors out;
    out.k = ts.k;
    out.jc = ts.jc;
    out.jr = ts.jr;
    out.qr_residual = ts.qr_residual;
    out.tolerance_reached = ts.tolerance_reached;
    if (ts.k == 0) {
        out.c = DenseMatrix(a.rows(), 0);
        out.u = DenseMatrix(0, 0);
        out.r = DenseMatrix(0, a.cols());
        out.residual = frobenius_norm(a);
        return out;
    }
    out.c = select_columns(a, ts.jc, ts.k);
    out.r = select_rows(a, ts.jr, ts.k);
    out.u = cur_linkage(out.r, ts.v, ts.jr);
    out.residual = frobenius_norm(subtract(a, matmul(out.c, matmul(out.u, out.r))));
    return out;
}

inline void check_id_sample(int k, int p, int m, int n) {
    if (k < 1) throw DimensionError(msg("rank k must be >= 1 (got %d)", k));
    if (p < 0) throw DimensionError(msg("oversampling p must be >= 0 (got %d)", p));
    if (k + p > std::min(m, n))
        throw DimensionError(msg("k + p = %d exceeds min(m,n) = %d", k + p, std::min(m, n)));
}

}  // namespace detail

// Two-sided ID: column ID first, then an exact row ID of the skeleton
// columns; the overall error equals the column stage's.
inline TwoSidedIdFactors id_two_sided(const DenseMatrix& a, int k, double tol = 0.0) {
    return detail::two_sided_from_column(a, id_column(a, k, tol));
}

// CUR: two-sided ID supplies the skeletons, C and R are copied straight out
// of A, and U solves the overdetermined system R^T U^T ~ V in least squares.
inline CurFactors cur(const DenseMatrix& a, int k, double tol = 0.0) {
    return detail::cur_from_two_sided(a, id_two_sided(a, k, tol));
}

// Randomized column ID: pivot a small power-iterated row sample of A instead
// of A itself. The sample QR is taken to full size, then the p extra
// rows/pivots are dropped. Fixed-rank only.
inline IdFactors id_rand(const DenseMatrix& a, int k, int p, int q_power, int s,
                         RngState& rng) {
    detail::check_id_sample(k, p, a.rows(), a.cols());
    const int l = k + p;
    const int n = a.cols();
    DenseMatrix y = sample_left(a, l, q_power, s, rng);
    PivotedQr pqr = pivoted_qr_partial(y, l, 0.0);
    IdFactors out;
    out.jc = pqr.perm;
    out.k = k;
    out.qr_residual = frobenius_norm(submatrix(pqr.s1, k, l - k, k, n - k));
    DenseMatrix s11 = submatrix(pqr.s1, 0, k, 0, k);
    DenseMatrix t(k, 0);
    if (n > k) {
        TriSolve ts = upper_tri_solve(s11, submatrix(pqr.s1, 0, k, k, n - k));
        out.clamped = ts.clamped;
        t = std::move(ts.t);
    }
    out.v = detail::build_interp_matrix(pqr.perm, t, n, k);
    return out;
}

// ID read off an existing QB factorization: the deterministic column ID of
// the small B lifts to A unchanged (B's columns are A's columns seen through
// an orthonormal basis, so pivot order and coefficients transfer).
inline IdFactors id_from_qb(const QbFactors& qb, const DenseMatrix& a, int k) {
    if (a.rows() != qb.q.rows() || a.cols() != qb.b.cols())
        throw DimensionError(detail::msg(
            "id_from_qb: matrix is %dx%d but the QB factors describe %dx%d", a.rows(),
            a.cols(), qb.q.rows(), qb.b.cols()));
    if (k < 1 || k > qb.ell)
        throw DimensionError(detail::msg("rank k = %d outside [1, rank(B) = %d]", k, qb.ell));
    return id_column(qb.b, k, 0.0);
}

// Randomized CUR: one randomized column ID, then the deterministic row side
// and linkage solve.
inline CurFactors cur_rand(const DenseMatrix& a, int k, int p, int q_power, int s,
                           RngState& rng) {
    IdFactors col = id_rand(a, k, p, q_power, s, rng);
    return detail::cur_from_two_sided(a, detail::two_sided_from_column(a, std::move(col)));
}

}  // namespace rlra
