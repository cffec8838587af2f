#include "fiat/pca.hpp"

#include <cmath>

#include "fiat/errors.hpp"

namespace fiat {

namespace {

double dot(const DVector& a, const DVector& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

DVector matvec(const DMatrix& c, const DVector& v) {
    DVector out(c.size(), 0.0);
    for (size_t i = 0; i < c.size(); ++i) out[i] = dot(c[i], v);
    return out;
}

double norm(const DVector& v) { return std::sqrt(dot(v, v)); }

}  // namespace

std::pair<DVector, DMatrix> covariance(const DMatrix& x_ns) {
    check(x_ns.size() >= 2, Err::DegenerateInput, "covariance needs at least two rows");
    size_t n = x_ns.size(), m = x_ns[0].size();
    DVector mean(m, 0.0);
    for (const auto& row : x_ns) {
        check(row.size() == m, Err::ShapeMismatch, "ragged matrix");
        for (size_t j = 0; j < m; ++j) mean[j] += row[j];
    }
    for (size_t j = 0; j < m; ++j) mean[j] /= (double)n;
    DMatrix c(m, DVector(m, 0.0));
    for (const auto& row : x_ns) {
        for (size_t i = 0; i < m; ++i) {
            double di = row[i] - mean[i];
            for (size_t j = 0; j < m; ++j) c[i][j] += di * (row[j] - mean[j]);
        }
    }
    for (auto& r : c)
        for (auto& v : r) v /= (double)(n - 1);
    return {mean, c};
}

void power_iteration(const DMatrix& c, size_t k, int max_iters, DVector& eigenvalues,
                     DMatrix& components, std::vector<bool>& degenerate) {
    size_t m = c.size();
    check(k >= 1 && k <= m, Err::ShapeMismatch, "component count out of range");
    for (const auto& r : c) check(r.size() == m, Err::ShapeMismatch, "covariance not square");

    DMatrix work = c;
    eigenvalues.clear();
    components.clear();
    degenerate.assign(k, false);

    auto orthogonalize = [&](DVector v) {
        for (const auto& prev : components) {
            double d = dot(v, prev);
            for (size_t j = 0; j < m; ++j) v[j] -= d * prev[j];
        }
        return v;
    };
    // Deterministic unit vector orthogonal to everything extracted so far:
    // the all-ones start vector first, then basis vectors.
    auto fallback_direction = [&]() {
        for (size_t cand = 0; cand <= m; ++cand) {
            DVector w(m, 0.0);
            if (cand == 0) {
                w.assign(m, 1.0 / std::sqrt((double)m));
            } else {
                w[cand - 1] = 1.0;
            }
            w = orthogonalize(w);
            double nw = norm(w);
            if (nw > 1e-6) {
                for (auto& x : w) x /= nw;
                return w;
            }
        }
        fail(Err::DegenerateInput, "no orthogonal direction left");
    };

    for (size_t comp = 0; comp < k; ++comp) {
        DVector v(m, 1.0 / std::sqrt((double)m));
        if (norm(matvec(work, v)) < 1e-12) {
            v.assign(m, 0.0);
            v[0] = 1.0;
        }
        bool dead = false;
        for (int it = 0; it < max_iters; ++it) {
            DVector w = matvec(work, v);
            double nw = norm(w);
            if (nw < 1e-12) {
                dead = true;
                break;
            }
            for (size_t j = 0; j < m; ++j) v[j] = w[j] / nw;
        }
        if (!dead) {
            // Re-orthogonalize against previously extracted directions;
            // deflation leaves O(convergence-error) leakage that the
            // orthonormality check would otherwise see.
            v = orthogonalize(v);
            double nv = norm(v);
            if (nv < 1e-9) {
                dead = true;
            } else {
                for (auto& x : v) x /= nv;
            }
        }
        if (dead) {
            degenerate[comp] = true;
            v = fallback_direction();
        }
        double lambda = dot(v, matvec(work, v));
        size_t arg = 0;
        for (size_t j = 1; j < m; ++j)
            if (std::abs(v[j]) > std::abs(v[arg])) arg = j;
        if (v[arg] < 0)
            for (auto& x : v) x = -x;

        eigenvalues.push_back(lambda);
        components.push_back(v);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) work[i][j] -= lambda * v[i] * v[j];
    }

    // Deflation yields approximately descending eigenvalues; enforce exactly.
    for (size_t i = 1; i < k; ++i) {
        for (size_t j = i; j > 0 && eigenvalues[j] > eigenvalues[j - 1]; --j) {
            std::swap(eigenvalues[j], eigenvalues[j - 1]);
            std::swap(components[j], components[j - 1]);
            std::swap(degenerate[j], degenerate[j - 1]);
        }
    }
}

PCAModel fit_pca(const DMatrix& x_ns, size_t k, int max_iters) {
    PCAModel model;
    auto [mean, c] = covariance(x_ns);
    model.mean = mean;
    model.covariance = c;
    power_iteration(c, k, max_iters, model.eigenvalues, model.components, model.degenerate);
    return model;
}

DMatrix project(const DMatrix& x_ns, const PCAModel& model) {
    size_t m = model.mean.size();
    DMatrix y;
    y.reserve(x_ns.size());
    for (const auto& row : x_ns) {
        check(row.size() == m, Err::ShapeMismatch, "column count differs from fitted model");
        DVector out(model.components.size(), 0.0);
        for (size_t i = 0; i < model.components.size(); ++i) {
            double s = 0;
            for (size_t j = 0; j < m; ++j) s += model.components[i][j] * (row[j] - model.mean[j]);
            out[i] = s;
        }
        y.push_back(out);
    }
    return y;
}

DMatrix to_double(const FxMatrix& m) {
    DMatrix out(m.rows, DVector(m.cols));
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) out[r][c] = std::ldexp((double)m.at(r, c), -kScaleBits);
    return out;
}

__int128 pca_orth_tol40() {
    return (__int128)std::llround(1e-4 * std::ldexp(1.0, 40));
}

FxMatrix FixedPca::project(const FxMatrix& x_ns) const {
    check(x_ns.cols == m, Err::ShapeMismatch, "column count differs from fitted model");
    FxMatrix y(x_ns.rows, k);
    for (size_t r = 0; r < x_ns.rows; ++r) {
        for (size_t i = 0; i < k; ++i) {
            __int128 acc = 0;  // scale 2^40
            for (size_t j = 0; j < m; ++j)
                acc += (__int128)eigvec_raw[i][j] * (x_ns.at(r, j) - mean_raw[j]);
            y.at(r, i) = (int64_t)round_div(acc, (__int128)1 << kScaleBits);
        }
    }
    return y;
}

FixedPca fit_pca_fixed(const FxMatrix& x_ns, size_t k, int max_iters) {
    check(x_ns.rows >= 2, Err::DegenerateInput, "need at least two rows");
    check(k >= 1 && k <= x_ns.cols, Err::ShapeMismatch, "component count out of range");
    FixedPca f;
    f.n_rows = x_ns.rows;
    f.m = x_ns.cols;
    f.k = k;
    const size_t m = f.m;
    const __int128 n = (__int128)x_ns.rows;

    f.col_sums.assign(m, 0);
    for (size_t r = 0; r < x_ns.rows; ++r)
        for (size_t j = 0; j < m; ++j) f.col_sums[j] += x_ns.at(r, j);
    f.mean_raw.resize(m);
    for (size_t j = 0; j < m; ++j) f.mean_raw[j] = (int64_t)round_div(f.col_sums[j], n);

    f.m40.assign(m * m, 0);
    for (size_t r = 0; r < x_ns.rows; ++r) {
        for (size_t i = 0; i < m; ++i) {
            __int128 di = x_ns.at(r, i) - f.mean_raw[i];
            for (size_t j = 0; j < m; ++j)
                f.m40[i * m + j] += di * (x_ns.at(r, j) - f.mean_raw[j]);
        }
    }
    f.cov_raw.resize(m * m);
    const __int128 cov_den = (n - 1) << kScaleBits;
    for (size_t ij = 0; ij < m * m; ++ij)
        f.cov_raw[ij] = (int64_t)round_div(f.m40[ij], cov_den);
    f.trace_raw = 0;
    for (size_t j = 0; j < m; ++j) f.trace_raw += f.cov_raw[j * m + j];
    f.tol_eig_raw = fxp_mul(encode(1e-3), fxp_from_raw(f.trace_raw)).raw;

    // Power iteration runs on the decoded fixed covariance so the hint error
    // against the in-circuit residual check is just the re-encoding ulp.
    DMatrix cov_d(m, DVector(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            cov_d[i][j] = std::ldexp((double)f.cov_raw[i * m + j], -kScaleBits);
    DVector eigval;
    DMatrix eigvec;
    std::vector<bool> degenerate;
    power_iteration(cov_d, k, max_iters, eigval, eigvec, degenerate);
    f.float_model.mean.resize(m);
    for (size_t j = 0; j < m; ++j) f.float_model.mean[j] = std::ldexp((double)f.mean_raw[j], -kScaleBits);
    f.float_model.covariance = cov_d;
    f.float_model.eigenvalues = eigval;
    f.float_model.components = eigvec;
    f.float_model.degenerate = degenerate;

    f.eigval_raw.resize(k);
    f.eigvec_raw.assign(k, std::vector<int64_t>(m));
    for (size_t i = 0; i < k; ++i) {
        f.eigval_raw[i] = encode(eigval[i]).raw;
        for (size_t j = 0; j < m; ++j) f.eigvec_raw[i][j] = encode(eigvec[i][j]).raw;
    }

    // Native replay of the circuit's eigenpair checks.
    for (size_t i = 0; i < k; ++i) {
        for (size_t r = 0; r < m; ++r) {
            __int128 cv = 0;
            for (size_t j = 0; j < m; ++j)
                cv += (__int128)f.cov_raw[r * m + j] * f.eigvec_raw[i][j];
            __int128 resid = cv - (__int128)f.eigval_raw[i] * f.eigvec_raw[i][r];
            __int128 bound = (__int128)f.tol_eig_raw << kScaleBits;
            check(resid <= bound && -resid <= bound, Err::HintFailure,
                  "eigenpair residual exceeds in-circuit tolerance");
        }
        for (size_t j = 0; j <= i; ++j) {
            __int128 d = 0;
            for (size_t t = 0; t < m; ++t)
                d += (__int128)f.eigvec_raw[i][t] * f.eigvec_raw[j][t];
            __int128 target = (i == j) ? ((__int128)1 << 40) : 0;
            __int128 dev = d - target;
            check(dev <= pca_orth_tol40() && -dev <= pca_orth_tol40(), Err::HintFailure,
                  "eigenvector orthonormality exceeds in-circuit tolerance");
        }
    }
    return f;
}

}  // namespace fiat
