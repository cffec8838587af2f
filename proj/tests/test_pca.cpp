#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "fiat/errors.hpp"
#include "fiat/pca.hpp"

using namespace fiat;

namespace {

// Random symmetric matrix with prescribed eigenvalues via a random rotation.
DMatrix synth_symmetric(std::mt19937_64& rng, const std::vector<double>& eigs) {
    size_t m = eigs.size();
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd a(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd d(m);
    for (size_t i = 0; i < m; ++i) d(i) = eigs[i];
    Eigen::MatrixXd s = q * d.asDiagonal() * q.transpose();
    DMatrix out(m, DVector(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) out[i][j] = 0.5 * (s(i, j) + s(j, i));
    return out;
}

}  // namespace

TEST_CASE("covariance basics") {
    DMatrix same = {{1.0, 2.0}, {1.0, 2.0}};
    auto [mean0, c0] = covariance(same);
    CHECK(c0[0][0] == 0.0);
    CHECK(c0[1][1] == 0.0);

    DMatrix two = {{0.0, 0.0}, {1.0, 1.0}};
    auto [mean, c] = covariance(two);
    CHECK(mean[0] == 0.5);
    CHECK(c[0][0] == doctest::Approx(0.5));
    CHECK(c[0][1] == doctest::Approx(0.5));
    CHECK(c[1][1] == doctest::Approx(0.5));

    CHECK_THROWS_AS(covariance(DMatrix{{1.0, 2.0}}), Error);
}

TEST_CASE("covariance matches a naive double-loop oracle") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 2.0);
    DMatrix x(100, DVector(3));
    for (auto& row : x)
        for (auto& v : row) v = g(rng);
    auto [mean, c] = covariance(x);

    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            double mi = 0, mj = 0;
            for (const auto& row : x) {
                mi += row[i];
                mj += row[j];
            }
            mi /= x.size();
            mj /= x.size();
            double acc = 0;
            for (const auto& row : x) acc += (row[i] - mi) * (row[j] - mj);
            acc /= (x.size() - 1);
            CHECK(std::abs(c[i][j] - acc) < 1e-9);
        }
    }
}

TEST_CASE("power iteration on easy spectra") {
    DMatrix diag = {{4.0, 0.0}, {0.0, 1.0}};
    DVector vals;
    DMatrix vecs;
    std::vector<bool> flags;
    power_iteration(diag, 1, 20, vals, vecs, flags);
    CHECK(vals[0] == doctest::Approx(4.0));
    CHECK(std::abs(std::abs(vecs[0][0]) - 1.0) < 1e-6);

    DMatrix ident = {{1.0, 0.0}, {0.0, 1.0}};
    power_iteration(ident, 2, 20, vals, vecs, flags);
    CHECK(vals[0] == doctest::Approx(1.0));
    CHECK(vals[1] == doctest::Approx(1.0));

    DMatrix zero = {{0.0, 0.0}, {0.0, 0.0}};
    power_iteration(zero, 1, 20, vals, vecs, flags);
    CHECK(vals[0] == 0.0);
    CHECK(flags[0]);
    CHECK(vecs[0][0] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("eigenvalues match dense oracle under the gap condition") {
    std::mt19937_64 rng(9);
    int done = 0;
    while (done < 100) {
        size_t m = 3 + rng() % 7;  // up to 9
        std::vector<double> eigs;
        double top = 1.0 + (double)(rng() % 50) / 10.0;
        double ratio = 0.3 + (double)(rng() % 40) / 100.0;  // <= 0.7
        for (size_t i = 0; i < m; ++i) eigs.push_back(top * std::pow(ratio, (double)i));
        DMatrix c = synth_symmetric(rng, eigs);
        size_t k = std::min<size_t>(1 + rng() % 3, m);

        // The convergence constant scales with 1/|<start, v_i>|; with the
        // deterministic all-ones start a near-orthogonal eigenvector stalls
        // the iteration, so condition the ensemble on a sane overlap.
        Eigen::MatrixXd ec(m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) ec(i, j) = c[i][j];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ec);
        bool ok_overlap = true;
        for (size_t i = 0; i < k; ++i) {
            double dot = 0;
            for (size_t j = 0; j < m; ++j)
                dot += solver.eigenvectors().col(m - 1 - i)(j) / std::sqrt((double)m);
            ok_overlap &= std::abs(dot) >= 0.15;
        }
        if (!ok_overlap) continue;
        ++done;

        DVector vals;
        DMatrix vecs;
        std::vector<bool> flags;
        power_iteration(c, k, 20, vals, vecs, flags);
        Eigen::VectorXd oracle = solver.eigenvalues().reverse();
        for (size_t i = 0; i < vals.size(); ++i) {
            CHECK(std::abs(vals[i] - oracle(i)) <= 1e-4 * std::abs(oracle(i)));
        }
    }
}

TEST_CASE("residual and deflation invariants") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        size_t m = 4 + rng() % 5;
        std::vector<double> eigs;
        for (size_t i = 0; i < m; ++i) eigs.push_back(3.0 * std::pow(0.6, (double)i));
        DMatrix c = synth_symmetric(rng, eigs);
        DVector vals;
        DMatrix vecs;
        std::vector<bool> flags;
        power_iteration(c, 3, 20, vals, vecs, flags);

        double cnorm = 0;
        for (const auto& r : c)
            for (double v : r) cnorm = std::max(cnorm, std::abs(v));
        double trace = 0;
        for (size_t i = 0; i < m; ++i) trace += c[i][i];

        double eigsum = 0;
        for (size_t i = 0; i < vals.size(); ++i) {
            eigsum += vals[i];
            DVector cv(m, 0.0);
            for (size_t r = 0; r < m; ++r)
                for (size_t j = 0; j < m; ++j) cv[r] += c[r][j] * vecs[i][j];
            double resid = 0;
            for (size_t r = 0; r < m; ++r)
                resid += (cv[r] - vals[i] * vecs[i][r]) * (cv[r] - vals[i] * vecs[i][r]);
            CHECK(std::sqrt(resid) <= 1e-3 * trace);
            // unit norm and mutual orthogonality
            double nn = 0;
            for (double v : vecs[i]) nn += v * v;
            CHECK(std::abs(nn - 1.0) < 1e-6);
            for (size_t j = 0; j < i; ++j) {
                double d = 0;
                for (size_t t = 0; t < m; ++t) d += vecs[i][t] * vecs[j][t];
                CHECK(std::abs(d) < 1e-4);
            }
        }
        CHECK(eigsum <= trace + 1e-6);
        for (size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] <= vals[i - 1] + 1e-12);
    }
}

TEST_CASE("projection basics") {
    PCAModel ident;
    ident.mean = {0.0, 0.0};
    ident.components = {{1.0, 0.0}, {0.0, 1.0}};
    ident.eigenvalues = {1.0, 1.0};
    DMatrix x = {{1.0, 2.0}, {3.0, 4.0}};
    DMatrix y = project(x, ident);
    CHECK(y == x);

    // data along (1,1)/sqrt(2): 1-D projection is the signed distance
    DMatrix ray = {{1.0, 1.0}, {2.0, 2.0}, {-1.0, -1.0}, {0.0, 0.0}};
    PCAModel model = fit_pca(ray, 1);
    DMatrix py = project(ray, model);
    for (size_t r = 0; r < ray.size(); ++r) {
        double expected = (ray[r][0] - model.mean[0]) * model.components[0][0] +
                          (ray[r][1] - model.mean[1]) * model.components[0][1];
        CHECK(py[r][0] == doctest::Approx(expected));
        CHECK(std::abs(std::abs(py[r][0]) -
                       std::sqrt(2.0) * std::abs(ray[r][0] - model.mean[0])) < 1e-9);
    }
    CHECK(py.size() == ray.size());
}

TEST_CASE("fixed projection tracks the float path") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g(0.0, 1.5);
    size_t n = 80, m = 4, k = 2;
    FxMatrix x(n, m);
    DMatrix xd(n, DVector(m));
    for (size_t r = 0; r < n; ++r) {
        double base = g(rng);
        for (size_t c = 0; c < m; ++c) {
            double v = base * (1.0 + 0.3 * c) + 0.25 * g(rng) * (c + 1);
            x.at(r, c) = encode(v).raw;
            xd[r][c] = decode(fxp_from_raw(x.at(r, c)));
        }
    }
    FixedPca fx = fit_pca_fixed(x, k);
    FxMatrix y = fx.project(x);

    PCAModel fm;
    fm.mean = fx.float_model.mean;
    fm.components.clear();
    for (size_t i = 0; i < k; ++i) {
        DVector row(m);
        for (size_t j = 0; j < m; ++j) row[j] = decode(fxp_from_raw(fx.eigvec_raw[i][j]));
        fm.components.push_back(row);
    }
    DMatrix yd = project(xd, fm);
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i < k; ++i)
            CHECK(std::abs(decode(fxp_from_raw(y.at(r, i))) - yd[r][i]) <=
                  std::ldexp(1.0, -10));
}

TEST_CASE("fixed fit replays the circuit checks") {
    std::mt19937_64 rng(27);
    std::normal_distribution<double> g(0.0, 1.0);
    size_t n = 64, m = 3;
    FxMatrix x(n, m);
    for (size_t r = 0; r < n; ++r) {
        double a = g(rng), b = g(rng), c = g(rng);
        x.at(r, 0) = encode(2.0 * a).raw;
        x.at(r, 1) = encode(a + 0.8 * b).raw;
        x.at(r, 2) = encode(0.5 * c).raw;
    }
    CHECK_NOTHROW(fit_pca_fixed(x, 2));

    // identical rows: zero covariance, flagged zero eigenpair
    FxMatrix same(4, 2);
    for (size_t r = 0; r < 4; ++r) {
        same.at(r, 0) = encode(1.0).raw;
        same.at(r, 1) = encode(2.0).raw;
    }
    FixedPca fz = fit_pca_fixed(same, 1);
    CHECK(fz.eigval_raw[0] == 0);
    CHECK(fz.float_model.degenerate[0]);
}
