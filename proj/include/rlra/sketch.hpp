#pragma once

#include <cstdint>

#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/core/rng.hpp"

namespace rlra {

// Which finishing transform turns a QB factorization into an SVD: QR of B^T,
// or an eigendecomposition of B B^T.
enum class Vnum { kQr, kBbt };

// Parameter bundle shared by the randomized drivers. Defaults: oversampling
// p=5, one power iteration, orthonormalization every half-multiply.
struct SketchParams {
    int k = 0;             // target rank; 0 selects tolerance mode
    int p = 5;             // oversampling
    int q = 1;             // power iterations
    int s = 1;             // orthonormalization period in half-multiplies
    double tol = 0.0;      // tolerance-mode threshold
    int block = 20;        // block width (kstep) for blocked QB
    int max_blocks = 12;   // block cap for blocked QB
    Vnum vnum = Vnum::kQr;
    std::uint64_t seed = 0;

    void validate(int m, int n) const {
        if ((k >= 1) == (tol > 0.0))
            throw DimensionError(detail::msg(
                "SketchParams: exactly one of rank (k=%d) and tolerance (tol=%g) must be set", k, tol));
        if (k >= 1 && k + p > std::min(m, n))
            throw DimensionError(detail::msg("SketchParams: k+p = %d exceeds min(m,n) = %d for %dx%d",
                                             k + p, std::min(m, n), m, n));
        if (p < 0 || q < 0 || s < 1 || block < 1 || max_blocks < 1 || tol < 0.0 || k < 0)
            throw DimensionError("SketchParams: negative or zero-valued parameter out of range");
    }
};

// Power-scheme range sampler: Y = (A A^T)^q A Omega with Omega an n-by-l
// Gaussian draw, re-orthonormalizing between half-multiplies on the mod-s
// schedule (s=1 orthonormalizes before every multiply, larger s less often).
inline DenseMatrix sample_right(const DenseMatrix& a, int l, int q, int s, RngState& rng) {
    const int min_dim = std::min(a.rows(), a.cols());
    if (l < 1 || l > min_dim)
        throw DimensionError(detail::msg("sample_right: width %d out of range [1,%d] for %dx%d", l,
                                         min_dim, a.rows(), a.cols()));
    if (q < 0 || s < 1)
        throw DimensionError(detail::msg("sample_right: q=%d, s=%d out of range", q, s));
    DenseMatrix omega = gaussian_matrix(a.cols(), l, rng);
    DenseMatrix y = matmul(a, omega);
    for (int j = 1; j <= q; ++j) {
        if ((2 * j - 2) % s == 0) y = orth(y);
        DenseMatrix z = matmul(a, y, /*trans_a=*/true);
        if ((2 * j - 1) % s == 0) z = orth(z);
        y = matmul(a, z);
    }
    return y;
}

// Row-space sampler, the mirror of sample_right: Y = Omega~ A (A^T A)^q as an
// l-by-n matrix, with the same mod-s schedule applied to Y^T. Defined by
// transposition so the two samplers are exactly dual.
inline DenseMatrix sample_left(const DenseMatrix& a, int l, int q, int s, RngState& rng) {
    return transpose(sample_right(transpose(a), l, q, s, rng));
}

}  // namespace rlra
