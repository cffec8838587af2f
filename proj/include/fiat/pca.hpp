#pragma once

#include <cstdint>
#include <vector>

#include "fiat/dataset.hpp"

namespace fiat {

using DMatrix = std::vector<std::vector<double>>;
using DVector = std::vector<double>;

struct PCAModel {
    DVector mean;              // m
    DMatrix covariance;        // m x m
    DVector eigenvalues;       // k, descending
    DMatrix components;        // k rows, unit 2-norm
    std::vector<bool> degenerate;  // zero-matrix fallback flag per component
};

// Sample covariance (divide by N-1) of an N x m row-major matrix.
std::pair<DVector, DMatrix> covariance(const DMatrix& x_ns);

// Extracts k eigenpairs one by one: exactly max_iters normalized iterations
// v <- Cv/||Cv|| per pair, Hotelling deflation afterwards. Each extracted
// vector is re-orthogonalized against the previous ones and sign-fixed so its
// largest-magnitude entry is positive. A zero (deflated) matrix yields a zero
// eigenvalue with the start vector, flagged.
void power_iteration(const DMatrix& c, size_t k, int max_iters, DVector& eigenvalues,
                     DMatrix& components, std::vector<bool>& degenerate);

PCAModel fit_pca(const DMatrix& x_ns, size_t k, int max_iters = 20);

// Y_i = components * (x_i - mean).
DMatrix project(const DMatrix& x_ns, const PCAModel& model);

DMatrix to_double(const FxMatrix& m);

// Fixed-point PCA pipeline with the exact rounding semantics the audit
// circuit verifies. All "raw" values are scale-2^20 integers; m40 values are
// scale-2^40 pre-division accumulators.
struct FixedPca {
    size_t n_rows = 0, m = 0, k = 0;
    std::vector<__int128> col_sums;        // m
    std::vector<int64_t> mean_raw;         // m, round_div(col_sum, N)
    std::vector<__int128> m40;             // m*m, sum of centered products
    std::vector<int64_t> cov_raw;          // m*m, round_div(m40, (N-1)*2^s)
    int64_t trace_raw = 0;
    int64_t tol_eig_raw = 0;               // fxp floor(1e-3 * trace)
    std::vector<int64_t> eigval_raw;       // k
    std::vector<std::vector<int64_t>> eigvec_raw;  // k x m
    PCAModel float_model;

    FxMatrix project(const FxMatrix& x_ns) const;
};

// Orthonormality tolerance of the eigenpair hint check, at scale 2^40.
__int128 pca_orth_tol40();

// Fits the fixed-point model (float power iteration on the decoded fixed
// covariance, hints re-encoded) and natively verifies the residual and
// orthogonality bounds the circuit will enforce; HintFailure otherwise.
FixedPca fit_pca_fixed(const FxMatrix& x_ns, size_t k, int max_iters = 20);

}  // namespace fiat
