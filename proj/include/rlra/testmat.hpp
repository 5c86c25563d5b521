#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/core/rng.hpp"

namespace rlra {

// Synthetic singular spectra on a log scale: sigma_j = 10^{e_j} with the
// exponents linearly spaced between fixed endpoints. The three named kinds
// differ only in how fast they decay (half a decade, two decades, three and a
// half decades across the full rank).
struct SpectrumSpec {
    enum class Kind { kTypeI, kTypeII, kTypeIII, kCustom };

    Kind kind = Kind::kTypeII;
    std::vector<double> custom_exponents;  // used by kCustom

    static SpectrumSpec type_i() { return {Kind::kTypeI, {}}; }
    static SpectrumSpec type_ii() { return {Kind::kTypeII, {}}; }
    static SpectrumSpec type_iii() { return {Kind::kTypeIII, {}}; }
    static SpectrumSpec custom(std::vector<double> exponents) {
        for (std::size_t i = 0; i + 1 < exponents.size(); ++i)
            if (exponents[i] < exponents[i + 1])
                throw DimensionError("SpectrumSpec: custom exponents must be nonincreasing");
        return {Kind::kCustom, std::move(exponents)};
    }

    // The r singular values, strictly positive and nonincreasing.
    std::vector<double> sigma(int r) const {
        if (r < 1) throw DimensionError("SpectrumSpec: rank must be positive");
        std::vector<double> exps;
        if (kind == Kind::kCustom) {
            if (static_cast<int>(custom_exponents.size()) != r)
                throw DimensionError(detail::msg("SpectrumSpec: %zu custom exponents for rank %d",
                                                 custom_exponents.size(), r));
            exps = custom_exponents;
        } else {
            const double end = kind == Kind::kTypeI ? -0.5 : kind == Kind::kTypeII ? -2.0 : -3.5;
            exps.resize(r);
            if (r == 1) {
                exps[0] = end;  // logspace convention: a single point sits at the endpoint
            } else {
                for (int j = 0; j < r; ++j) exps[j] = end * static_cast<double>(j) / (r - 1);
            }
        }
        std::vector<double> s(r);
        for (int j = 0; j < r; ++j) s[j] = std::pow(10.0, exps[j]);
        return s;
    }
};

struct TestMatrix {
    DenseMatrix a;
    std::vector<double> sigma_true;
};

// A = U diag(sigma) V^T with U, V orthonormalized Gaussian draws; the exact
// spectrum comes back alongside for oracle checks.
inline TestMatrix gen_test_matrix(int m, int n, const SpectrumSpec& spec, RngState& rng) {
    const int r = std::min(m, n);
    TestMatrix out;
    out.sigma_true = spec.sigma(r);
    DenseMatrix u = orth(gaussian_matrix(m, r, rng));
    DenseMatrix v = orth(gaussian_matrix(n, r, rng));
    scale_columns_inplace(u, out.sigma_true);
    out.a = matmul(u, v, false, true);
    return out;
}

}  // namespace rlra
