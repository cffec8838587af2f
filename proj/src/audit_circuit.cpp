#include "fiat/audit_circuit.hpp"

#include <cmath>

#include "fiat/errors.hpp"
#include "fiat/mimc.hpp"
#include "fiat/poseidon.hpp"

namespace fiat {

namespace {

constexpr int kDataBandBits = 44;        // |cell| < 2^43
constexpr int kMeanMagBits = 45;
constexpr int kMomentBandBits = 102;     // centered second-moment accumulators
constexpr int kCovMagBits = 70;
constexpr int kProjMagBits = 45;
constexpr int kEigvecBandBits = 22;
constexpr int kEigvalBandBits = 70;
constexpr int kResidualBits = 110;
constexpr int kBinRemBits = 44;
constexpr int kIdxBits = 5;              // bin index < 32
constexpr int kRatioQBits = 46;
constexpr int kRatioRemBits = 27;
constexpr int kMiMagBits = 40;
constexpr int kEskBits = 251;

const Fe& freivalds_tag() {
    static const Fe t = Fe::from_u64(0xF5F5);
    return t;
}

uint64_t ipow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

uint64_t AuditShape::grid_x() const { return ipow(intervals, n_sens); }
uint64_t AuditShape::grid_y() const { return ipow(intervals, y_dims()); }

void AuditShape::validate() const {
    check(n_rows >= 2, Err::ShapeError, "need at least two rows");
    check(n_sens >= 1 && m_nonsens >= 1, Err::ShapeError, "need columns on both sides");
    if (algo == AlgoKind::Pca)
        check(k_dims >= 1 && k_dims <= m_nonsens, Err::ShapeError,
              "pca dimension out of range");
    check(intervals >= 2 && intervals <= 16, Err::ShapeError,
          "intervals per dimension must be in [2, 16]");
    check(n_sens <= 6 && y_dims() <= 6, Err::ShapeError, "too many binned dimensions");
    check(grid_x() * grid_y() <= 250000, Err::ShapeError, "joint grid too large");
    check((uint64_t)n_rows * grid_x() * grid_y() <= 120000000ULL, Err::ShapeError,
          "circuit would be too large");
}

std::vector<Fe> AuditStatement::public_inputs() const {
    std::vector<Fe> out;
    out.reserve(num_public());
    out.push_back(data_hash);
    out.push_back(Fe::from_i128(threshold_raw));
    out.push_back(Fe::from_u64(pass ? 1 : 0));
    out.push_back(Fe::from_i128(mi_raw));
    out.push_back(y_enc_digest);
    out.push_back(pk.x);
    out.push_back(pk.y);
    out.push_back(Fe::from_u64((uint64_t)shape.algo));
    out.push_back(Fe::from_u64(shape.y_dims()));
    out.push_back(Fe::from_u64(shape.intervals));
    for (int64_t v : origin_x) out.push_back(Fe::from_i128(v));
    for (int64_t v : bw_x) out.push_back(Fe::from_i128(v));
    for (int64_t v : origin_y) out.push_back(Fe::from_i128(v));
    for (int64_t v : bw_y) out.push_back(Fe::from_i128(v));
    return out;
}

Var g_bin_index(R1csBuilder& b, const LinComb& x, const LinComb& origin, const LinComb& bw,
                uint32_t intervals) {
    LinComb u = x - origin;
    Var idx = b.alloc();
    Var rem = b.alloc();
    if (b.witnessing()) {
        __int128 uv = b.eval(u).to_i128();
        __int128 bwv = b.eval(bw).to_i128();
        check(bwv > 0, Err::HintFailure, "non-positive bandwidth");
        check(uv >= 0, Err::HintFailure, "value below binning origin");
        __int128 iv = uv / bwv;
        check(iv < 32, Err::HintFailure, "bin index exceeds circuit bound");
        b.assign(idx, Fe::from_i128(iv));
        b.assign(rem, Fe::from_i128(uv - iv * bwv));
    }
    b.constrain(lc_var(idx), bw, u - lc_var(rem));
    g_assert_range(b, lc_var(rem), kBinRemBits);
    g_assert_range(b, bw - lc_one() - lc_var(rem), kBinRemBits);
    g_assert_range(b, lc_var(idx), kIdxBits);
    auto bits = g_decompose(b, lc_var(idx) + lc_const_u64(32 - intervals), kIdxBits + 1);
    return g_select(b, bits[kIdxBits], lc_const_u64(intervals - 1), lc_var(idx));
}

namespace {

// One-hot selector over [0, intervals) for an index variable.
std::vector<LinComb> one_hot(R1csBuilder& b, Var value, uint32_t intervals) {
    int vv = 0;
    if (b.witnessing()) vv = (int)b.val(value).to_i128();
    LinComb ones, weighted;
    std::vector<LinComb> out;
    out.reserve(intervals);
    for (uint32_t v = 0; v < intervals; ++v) {
        Var o = b.alloc();
        if (b.witnessing()) b.assign(o, (int)v == vv ? Fe::one() : Fe::zero());
        g_assert_bool(b, o);
        ones.add(o, Fe::one());
        weighted.add(o, Fe::from_u64(v));
        out.push_back(lc_var(o));
    }
    g_assert_eq(b, ones, lc_one());
    g_assert_eq(b, weighted, lc_var(value));
    return out;
}

// Joint cell indicators across dims (row-major flattening, first dim slowest).
std::vector<LinComb> chain_indicators(R1csBuilder& b,
                                      const std::vector<std::vector<LinComb>>& per_dim,
                                      uint32_t intervals) {
    std::vector<LinComb> ind = per_dim[0];
    for (size_t d = 1; d < per_dim.size(); ++d) {
        std::vector<LinComb> next;
        next.reserve(ind.size() * intervals);
        for (const LinComb& c : ind)
            for (uint32_t v = 0; v < intervals; ++v)
                next.push_back(lc_var(g_mul(b, c, per_dim[d][v])));
        ind = std::move(next);
    }
    return ind;
}

}  // namespace

Var g_mi(R1csBuilder& b, const MiGadgetInput& in) {
    const size_t n_rows = in.x_rows.size();
    check(n_rows >= 1 && in.y_rows.size() == n_rows, Err::ShapeError, "row mismatch");
    const size_t nx = in.origin_x.size(), ny = in.origin_y.size();
    const uint32_t intervals = in.intervals;
    const uint64_t gx = ipow(intervals, (uint32_t)nx), gy = ipow(intervals, (uint32_t)ny);

    std::vector<LinComb> count_sum(gx * gy), cx_sum(gx), cy_sum(gy);
    for (size_t r = 0; r < n_rows; ++r) {
        std::vector<std::vector<LinComb>> hx, hy;
        for (size_t d = 0; d < nx; ++d) {
            Var idx = g_bin_index(b, in.x_rows[r][d], in.origin_x[d], in.bw_x[d], intervals);
            hx.push_back(one_hot(b, idx, intervals));
        }
        for (size_t d = 0; d < ny; ++d) {
            Var idx = g_bin_index(b, in.y_rows[r][d], in.origin_y[d], in.bw_y[d], intervals);
            hy.push_back(one_hot(b, idx, intervals));
        }
        auto xind = chain_indicators(b, hx, intervals);
        auto yind = chain_indicators(b, hy, intervals);
        for (uint64_t c = 0; c < gx; ++c) cx_sum[c] += xind[c];
        for (uint64_t c = 0; c < gy; ++c) cy_sum[c] += yind[c];
        for (uint64_t cx = 0; cx < gx; ++cx)
            for (uint64_t cy = 0; cy < gy; ++cy)
                count_sum[cx * gy + cy] += lc_var(g_mul(b, xind[cx], yind[cy]));
    }

    std::vector<Var> count(gx * gy), cxv(gx), cyv(gy);
    for (uint64_t c = 0; c < gx * gy; ++c) count[c] = b.materialize(count_sum[c]);
    for (uint64_t c = 0; c < gx; ++c) cxv[c] = b.materialize(cx_sum[c]);
    for (uint64_t c = 0; c < gy; ++c) cyv[c] = b.materialize(cy_sum[c]);

    const Fe num_scale = Fe::from_i128((__int128)n_rows << kScaleBits);
    LinComb mi_sum;
    for (uint64_t cx = 0; cx < gx; ++cx) {
        for (uint64_t cy = 0; cy < gy; ++cy) {
            Var cnt = count[cx * gy + cy];
            Var z = g_is_zero(b, lc_var(cnt));
            Var den = g_mul(b, lc_var(cxv[cx]), lc_var(cyv[cy]));
            Var q = b.alloc();
            Var rem = b.alloc();
            Var h = b.alloc();
            if (b.witnessing()) {
                __int128 cv = b.val(cnt).to_i128();
                __int128 dv = b.val(den).to_i128();
                if (cv > 0) {
                    __int128 num = (cv * (__int128)n_rows) << kScaleBits;
                    __int128 qv = round_div(num, dv);
                    b.assign(q, Fe::from_i128(qv));
                    b.assign(rem, Fe::from_i128(2 * num + dv - qv * 2 * dv));
                    b.assign(h, Fe::from_i128(fxp_ln_raw((int64_t)qv)));
                } else {
                    b.assign(q, Fe::zero());
                    b.assign(rem, Fe::from_i128(dv));
                    b.assign(h, Fe::zero());
                }
            }
            // q * 2den = 2*count*N*2^s + den - rem  (empty cell: q=0, rem=den)
            b.constrain(lc_var(q), lc_var(den).scaled(Fe::from_u64(2)),
                        lc_var(cnt).scaled(num_scale * Fe::from_u64(2)) + lc_var(den) -
                            lc_var(rem));
            g_assert_range(b, lc_var(rem), kRatioRemBits);
            g_assert_range(b,
                           lc_var(den).scaled(Fe::from_u64(2)) - lc_one() - lc_var(rem) +
                               lc_var(z).scaled(Fe::from_u64(1ULL << kRatioRemBits)),
                           kRatioRemBits + 1);
            g_assert_range(b, lc_var(q), kRatioQBits);
            // ln hint on q, with empty cells redirected to ln(1.0) = 0
            g_ln_check(b, lc_var(q) + lc_var(z).scaled(Fe::from_u64(1ULL << kScaleBits)),
                       lc_var(h));
            mi_sum += lc_var(g_mul(b, lc_var(cnt), lc_var(h)));
        }
    }
    return g_div_round_const(b, mi_sum, (__int128)n_rows, kMiMagBits);
}

void g_eigenpair_check(R1csBuilder& b, const std::vector<std::vector<LinComb>>& cov,
                       const std::vector<std::vector<Var>>& vecs, const std::vector<Var>& vals,
                       const LinComb& tol_scaled) {
    const size_t m = cov.size();
    const size_t k = vecs.size();
    for (size_t i = 0; i < k; ++i) {
        g_assert_signed_band(b, lc_var(vals[i]), kEigvalBandBits);
        for (size_t j = 0; j < m; ++j) g_assert_signed_band(b, lc_var(vecs[i][j]), kEigvecBandBits);
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t r = 0; r < m; ++r) {
            LinComb cv;
            for (size_t j = 0; j < m; ++j) cv += lc_var(g_mul(b, cov[r][j], lc_var(vecs[i][j])));
            LinComb lv = lc_var(g_mul(b, lc_var(vals[i]), lc_var(vecs[i][r])));
            LinComb resid = cv - lv;
            g_assert_range(b, tol_scaled + resid, kResidualBits);
            g_assert_range(b, tol_scaled - resid, kResidualBits);
        }
        for (size_t j = 0; j <= i; ++j) {
            LinComb dot;
            for (size_t t = 0; t < m; ++t)
                dot += lc_var(g_mul(b, lc_var(vecs[i][t]), lc_var(vecs[j][t])));
            __int128 target = (i == j) ? ((__int128)1 << 40) : 0;
            LinComb diff = dot - lc_const_i128(target);
            __int128 tol = pca_orth_tol40();
            int bits = 1;
            while (((__int128)1 << bits) < 2 * tol + 1) ++bits;
            g_assert_range(b, diff + lc_const_i128(tol), bits);
            g_assert_range(b, lc_const_i128(tol) - diff, bits);
        }
    }
}

namespace {

struct PublicVars {
    Var data_hash, threshold, pass, mi, y_digest, pk_x, pk_y, algo_id, k, intervals;
    std::vector<Var> origin_x, bw_x, origin_y, bw_y;
};

struct SynthResult {
    std::vector<Var> data_vars;
    size_t eigen_constraint_count = 0;
};

SynthResult synthesize(R1csBuilder& b, const AuditShape& shape, const NativeAudit* na) {
    shape.validate();
    const size_t n_rows = shape.n_rows, n = shape.n_sens, m = shape.m_nonsens;
    const size_t yd = shape.y_dims();
    SynthResult out;

    // --- public inputs, in statement order ---
    std::vector<Fe> pub_vals;
    if (na) pub_vals = na->statement.public_inputs();
    size_t pub_at = 0;
    auto pub = [&]() {
        Var v = b.alloc_public();
        if (na) b.assign(v, pub_vals.at(pub_at));
        ++pub_at;
        return v;
    };
    PublicVars p;
    p.data_hash = pub();
    p.threshold = pub();
    p.pass = pub();
    p.mi = pub();
    p.y_digest = pub();
    p.pk_x = pub();
    p.pk_y = pub();
    p.algo_id = pub();
    p.k = pub();
    p.intervals = pub();
    for (size_t d = 0; d < n; ++d) p.origin_x.push_back(pub());
    for (size_t d = 0; d < n; ++d) p.bw_x.push_back(pub());
    for (size_t d = 0; d < yd; ++d) p.origin_y.push_back(pub());
    for (size_t d = 0; d < yd; ++d) p.bw_y.push_back(pub());

    b.set_tag(Tag::Glue);
    g_assert_bool(b, p.pass);
    g_assert_eq(b, lc_var(p.algo_id), lc_const_u64((uint64_t)shape.algo));
    g_assert_eq(b, lc_var(p.k), lc_const_u64(yd));
    g_assert_eq(b, lc_var(p.intervals), lc_const_u64(shape.intervals));

    // --- witness data, serialization order ---
    out.data_vars.reserve(n_rows * (n + m));
    for (size_t r = 0; r < n_rows; ++r)
        for (size_t c = 0; c < n; ++c) {
            Var v = b.alloc();
            if (na) b.assign(v, Fe::from_i128(na->xs.at(r, c)));
            out.data_vars.push_back(v);
        }
    for (size_t r = 0; r < n_rows; ++r)
        for (size_t c = 0; c < m; ++c) {
            Var v = b.alloc();
            if (na) b.assign(v, Fe::from_i128(na->xns.at(r, c)));
            out.data_vars.push_back(v);
        }
    for (Var v : out.data_vars) g_assert_signed_band(b, lc_var(v), kDataBandBits);

    auto xs_lc = [&](size_t r, size_t c) { return lc_var(out.data_vars[r * n + c]); };
    auto xns_lc = [&](size_t r, size_t c) {
        return lc_var(out.data_vars[n_rows * n + r * m + c]);
    };

    // --- commitment check ---
    {
        TagScope tag(b, Tag::Hash);
        std::vector<LinComb> ser;
        ser.reserve(3 + out.data_vars.size());
        ser.push_back(lc_const_u64(n_rows));
        ser.push_back(lc_const_u64(n));
        ser.push_back(lc_const_u64(m));
        for (Var v : out.data_vars) ser.push_back(lc_var(v));
        LinComb digest = g_poseidon_hash(b, ser);
        g_assert_eq(b, digest, lc_var(p.data_hash));
    }

    // --- representation f: raw passthrough or verified PCA ---
    std::vector<std::vector<LinComb>> y_rows(n_rows, std::vector<LinComb>(yd));
    if (shape.algo == AlgoKind::RawData) {
        for (size_t r = 0; r < n_rows; ++r)
            for (size_t c = 0; c < m; ++c) y_rows[r][c] = xns_lc(r, c);
    } else {
        TagScope tag(b, Tag::Pca);
        const size_t k = shape.k_dims;

        std::vector<Var> mean(m);
        for (size_t j = 0; j < m; ++j) {
            LinComb col_sum;
            for (size_t r = 0; r < n_rows; ++r) col_sum += xns_lc(r, j);
            mean[j] = g_div_round_const(b, col_sum, (__int128)n_rows, kMeanMagBits);
        }
        auto xc_lc = [&](size_t r, size_t j) { return xns_lc(r, j) - lc_var(mean[j]); };

        // second-moment matrix, bound by Freivalds against Xc^T * Xc
        std::vector<std::vector<Var>> mom(m, std::vector<Var>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                mom[i][j] = b.alloc();
                if (na) b.assign(mom[i][j], Fe::from_i128(na->pca->m40[i * m + j]));
                g_assert_signed_band(b, lc_var(mom[i][j]), kMomentBandBits);
            }
        {
            std::vector<LinComb> fs;
            for (Var v : b.cs().public_inputs) fs.push_back(lc_var(v));
            fs.push_back(lc_const(freivalds_tag()));
            std::vector<LinComb> challenge;
            LinComb cur = g_poseidon_hash(b, fs);
            challenge.push_back(cur);
            for (size_t j = 1; j < m; ++j) {
                cur = g_poseidon_hash(b, std::vector<LinComb>{cur});
                challenge.push_back(cur);
            }
            std::vector<std::vector<LinComb>> a(m, std::vector<LinComb>(n_rows));
            std::vector<std::vector<LinComb>> bm(n_rows, std::vector<LinComb>(m));
            std::vector<std::vector<LinComb>> c(m, std::vector<LinComb>(m));
            for (size_t r = 0; r < n_rows; ++r)
                for (size_t j = 0; j < m; ++j) {
                    a[j][r] = xc_lc(r, j);
                    bm[r][j] = xc_lc(r, j);
                }
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) c[i][j] = lc_var(mom[i][j]);
            g_freivalds(b, a, bm, c, challenge);
        }

        // covariance entries and the trace-scaled residual tolerance
        std::vector<std::vector<LinComb>> cov(m, std::vector<LinComb>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                cov[i][j] = lc_var(g_div_round_const(
                    b, lc_var(mom[i][j]), (__int128)(n_rows - 1) << kScaleBits, kCovMagBits));
        LinComb trace;
        for (size_t j = 0; j < m; ++j) trace += cov[j][j];
        Var tol = b.alloc();
        Var tol_rem = b.alloc();
        {
            const Fe tolc = Fe::from_i128(encode(1e-3).raw);
            if (na) {
                __int128 prod = (__int128)encode(1e-3).raw * b.eval(trace).to_i128();
                __int128 tv = floor_div(prod, (__int128)1 << kScaleBits);
                b.assign(tol, Fe::from_i128(tv));
                b.assign(tol_rem, Fe::from_i128(prod - (tv << kScaleBits)));
            }
            g_assert_eq(b, trace.scaled(tolc),
                        lc_var(tol).scaled(Fe::from_u64(1ULL << kScaleBits)) + lc_var(tol_rem));
            g_assert_range(b, lc_var(tol_rem), kScaleBits);
            g_assert_signed_band(b, lc_var(tol), 60);
        }

        std::vector<std::vector<Var>> vecs(k, std::vector<Var>(m));
        std::vector<Var> vals(k);
        for (size_t i = 0; i < k; ++i) {
            vals[i] = b.alloc();
            if (na) b.assign(vals[i], Fe::from_i128(na->pca->eigval_raw[i]));
            for (size_t j = 0; j < m; ++j) {
                vecs[i][j] = b.alloc();
                if (na) b.assign(vecs[i][j], Fe::from_i128(na->pca->eigvec_raw[i][j]));
            }
        }
        size_t before = b.constraint_count();
        g_eigenpair_check(b, cov, vecs, vals,
                          lc_var(tol).scaled(Fe::from_u64(1ULL << kScaleBits)));
        out.eigen_constraint_count = b.constraint_count() - before;

        for (size_t r = 0; r < n_rows; ++r)
            for (size_t i = 0; i < k; ++i) {
                LinComb acc;
                for (size_t j = 0; j < m; ++j)
                    acc += lc_var(g_mul(b, lc_var(vecs[i][j]), xc_lc(r, j)));
                y_rows[r][i] =
                    lc_var(g_div_round_const(b, acc, (__int128)1 << kScaleBits, kProjMagBits));
            }
    }

    // --- mutual information ---
    Var mi_var;
    {
        TagScope tag(b, Tag::Mi);
        MiGadgetInput in;
        in.intervals = shape.intervals;
        in.x_rows.resize(n_rows);
        for (size_t r = 0; r < n_rows; ++r)
            for (size_t c = 0; c < n; ++c) in.x_rows[r].push_back(xs_lc(r, c));
        in.y_rows = y_rows;
        for (size_t d = 0; d < n; ++d) {
            in.origin_x.push_back(lc_var(p.origin_x[d]));
            in.bw_x.push_back(lc_var(p.bw_x[d]));
        }
        for (size_t d = 0; d < yd; ++d) {
            in.origin_y.push_back(lc_var(p.origin_y[d]));
            in.bw_y.push_back(lc_var(p.bw_y[d]));
        }
        mi_var = g_mi(b, in);
        g_assert_eq(b, lc_var(mi_var), lc_var(p.mi));
    }

    // --- threshold decision: pass=1 iff mi <= T ---
    {
        TagScope tag(b, Tag::Glue);
        LinComb sign = lc_var(p.pass).scaled(Fe::from_u64(2)) - lc_one();
        Var w = g_mul(b, sign, lc_var(p.threshold) - lc_var(mi_var));
        g_assert_range(b, lc_var(w) - lc_one() + lc_var(p.pass), kMiMagBits + 5);
    }

    // --- encryption: body[i] = pass * (plaintext[i] + keystream[i]) ---
    {
        TagScope tag(b, Tag::Enc);
        std::vector<Var> esk_bits(kEskBits);
        for (int i = 0; i < kEskBits; ++i) {
            esk_bits[i] = b.alloc();
            if (na) b.assign(esk_bits[i], na->esk.bit(i) ? Fe::one() : Fe::zero());
            g_assert_bool(b, esk_bits[i]);
        }
        LcPoint pk_pt{lc_var(p.pk_x), lc_var(p.pk_y)};
        g_assert_on_curve(b, pk_pt);
        LcPoint eph = g_jub_mul_const_base(b, esk_bits, jub_generator());
        LcPoint shared_pt = g_jub_mul(b, esk_bits, pk_pt);

        std::vector<LinComb> digest_in;
        digest_in.push_back(lc_var(g_mul(b, lc_var(p.pass), eph.x)));
        digest_in.push_back(lc_var(g_mul(b, lc_var(p.pass), eph.y)));
        size_t total = 1 + n_rows * yd;
        for (size_t i = 0; i < total; ++i) {
            LinComb pt;
            if (i > 0) {
                size_t idx = i - 1;
                pt = y_rows[idx / yd][idx % yd];
            }
            LinComb ks = g_mimc_prf(b, shared_pt.x, Fe::from_u64(i));
            digest_in.push_back(lc_var(g_mul(b, lc_var(p.pass), pt + ks)));
        }
        LinComb digest = g_poseidon_hash(b, digest_in);
        g_assert_eq(b, digest, lc_var(p.y_digest));
    }

    return out;
}

}  // namespace

NativeAudit run_native_audit(const Dataset& d, const AuditProposal& proposal, const U256& esk,
                             int64_t threshold_raw, uint32_t intervals) {
    NativeAudit na;
    auto [xs, xns] = split(d);
    na.xs = xs;
    na.xns = xns;
    na.shape.n_rows = (uint32_t)xs.rows;
    na.shape.n_sens = (uint32_t)xs.cols;
    na.shape.m_nonsens = (uint32_t)xns.cols;
    na.shape.algo = proposal.algo;
    na.shape.k_dims = proposal.algo == AlgoKind::Pca ? proposal.k : (uint32_t)xns.cols;
    na.shape.intervals = intervals;
    na.shape.validate();

    na.data_hash = poseidon_hash(canonical_serialize(d));

    if (proposal.algo == AlgoKind::Pca) {
        na.pca = fit_pca_fixed(xns, proposal.k);
        na.y = na.pca->project(xns);
    } else {
        na.y = xns;
    }

    na.spec_x = BinningSpec::from_data(xs, (int)intervals);
    na.spec_y = BinningSpec::from_data(na.y, (int)intervals);
    na.mi = audit_mi(xs, na.y, na.spec_x, na.spec_y);
    na.threshold_raw = threshold_raw;
    na.pass = na.mi.mi_nats.raw <= threshold_raw;

    check(jub_in_subgroup(proposal.pk), Err::InvalidPoint, "proposal public key invalid");
    na.esk = esk;
    na.eph = jub_mul(esk, jub_generator());
    na.shared = ecdh(esk, proposal.pk);

    std::vector<Fe> plaintext;
    plaintext.reserve(1 + na.y.a.size());
    plaintext.push_back(Fe::zero());  // key-confirmation sentinel
    for (int64_t v : na.y.a) plaintext.push_back(Fe::from_i128(v));
    na.cipher = ecies_encrypt(proposal.pk, plaintext, esk);

    na.body.assign(plaintext.size(), Fe::zero());
    if (na.pass) na.body = na.cipher.body;
    std::vector<Fe> digest_in;
    digest_in.push_back(na.pass ? na.eph.x : Fe::zero());
    digest_in.push_back(na.pass ? na.eph.y : Fe::zero());
    for (const Fe& v : na.body) digest_in.push_back(v);
    na.y_digest = poseidon_hash(digest_in);

    na.statement.data_hash = na.data_hash;
    na.statement.threshold_raw = threshold_raw;
    na.statement.pass = na.pass;
    na.statement.mi_raw = na.mi.mi_nats.raw;
    na.statement.y_enc_digest = na.y_digest;
    na.statement.pk = proposal.pk;
    na.statement.shape = na.shape;
    na.statement.origin_x = na.spec_x.origin_raw;
    na.statement.bw_x = na.spec_x.bandwidth_raw;
    na.statement.origin_y = na.spec_y.origin_raw;
    na.statement.bw_y = na.spec_y.bandwidth_raw;
    return na;
}

AuditCircuit build_audit_circuit(const AuditShape& shape) {
    AuditCircuit c;
    c.shape = shape;
    R1csBuilder b(false);
    SynthResult res = synthesize(b, shape, nullptr);
    c.cs = std::move(b.cs());
    c.data_vars = std::move(res.data_vars);
    c.eigen_constraint_count = res.eigen_constraint_count;
    return c;
}

std::pair<Witness, AuditStatement> generate_witness(const AuditCircuit& circuit,
                                                    const Dataset& d,
                                                    const AuditProposal& proposal,
                                                    const U256& esk, int64_t threshold_raw) {
    NativeAudit na = run_native_audit(d, proposal, esk, threshold_raw, circuit.shape.intervals);
    check(na.shape == circuit.shape, Err::ShapeError,
          "dataset/proposal shape does not match the circuit");
    R1csBuilder b(true);
    synthesize(b, circuit.shape, &na);
    check(b.cs().num_vars == circuit.cs.num_vars &&
              b.cs().constraints.size() == circuit.cs.constraints.size(),
          Err::ShapeError, "witness synthesis diverged from circuit structure");
    return {std::move(b.witness()), na.statement};
}

}  // namespace fiat
