#include "fiat/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "fiat/errors.hpp"

namespace fiat {

void BinningSpec::validate() const {
    check(!bandwidth_raw.empty(), Err::ShapeMismatch, "binning spec has no dimensions");
    check(origin_raw.size() == bandwidth_raw.size(), Err::ShapeMismatch,
          "origin/bandwidth dimension mismatch");
    for (int64_t b : bandwidth_raw)
        check(b > 0, Err::DomainError, "bandwidth must be positive");
    check(intervals_per_dim >= 2, Err::DomainError, "need at least two intervals");
}

BinningSpec BinningSpec::from_data(const FxMatrix& x, int intervals) {
    check(x.rows >= 1 && x.cols >= 1, Err::EmptyDataset, "empty matrix for binning spec");
    BinningSpec spec;
    spec.intervals_per_dim = intervals;
    for (size_t c = 0; c < x.cols; ++c) {
        int64_t lo = x.at(0, c), hi = x.at(0, c);
        for (size_t r = 1; r < x.rows; ++r) {
            lo = std::min(lo, x.at(r, c));
            hi = std::max(hi, x.at(r, c));
        }
        int64_t range = hi - lo;
        int64_t bw = (range + intervals - 1) / intervals;
        spec.origin_raw.push_back(lo);
        spec.bandwidth_raw.push_back(std::max<int64_t>(bw, 1));
    }
    return spec;
}

std::vector<int> bin_index(const std::vector<int64_t>& xraw, const BinningSpec& spec) {
    spec.validate();
    check(xraw.size() == spec.bandwidth_raw.size(), Err::ShapeMismatch,
          "point dimension does not match binning spec");
    std::vector<int> idx(xraw.size());
    for (size_t j = 0; j < xraw.size(); ++j) {
        __int128 q = floor_div((__int128)xraw[j] - spec.origin_raw[j], spec.bandwidth_raw[j]);
        if (q < 0) q = 0;
        if (q > spec.intervals_per_dim - 1) q = spec.intervals_per_dim - 1;
        idx[j] = (int)q;
    }
    return idx;
}

namespace {

CellIndex to_cell(const std::vector<int>& idx) {
    CellIndex c(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) c[i] = (uint8_t)idx[i];
    return c;
}

std::vector<int64_t> row_of(const FxMatrix& m, size_t r) {
    std::vector<int64_t> out(m.cols);
    for (size_t c = 0; c < m.cols; ++c) out[c] = m.at(r, c);
    return out;
}

}  // namespace

Marginal JointHistogram::x_marginal() const {
    Marginal m;
    m.total = total;
    for (const auto& [key, cnt] : cells) m.counts[key.first] += cnt;
    return m;
}

Marginal JointHistogram::y_marginal() const {
    Marginal m;
    m.total = total;
    for (const auto& [key, cnt] : cells) m.counts[key.second] += cnt;
    return m;
}

JointHistogram JointHistogram::transposed() const {
    JointHistogram t;
    t.total = total;
    for (const auto& [key, cnt] : cells) t.cells[{key.second, key.first}] = cnt;
    return t;
}

JointHistogram build_histogram(const FxMatrix& x, const FxMatrix& y,
                               const BinningSpec& spec_x, const BinningSpec& spec_y) {
    check(x.rows == y.rows, Err::ShapeMismatch, "row count mismatch between X and Y");
    JointHistogram h;
    h.total = x.rows;
    for (size_t r = 0; r < x.rows; ++r) {
        CellIndex cx = to_cell(bin_index(row_of(x, r), spec_x));
        CellIndex cy = to_cell(bin_index(row_of(y, r), spec_y));
        ++h.cells[{cx, cy}];
    }
    return h;
}

FixedPoint entropy(const Marginal& hist) {
    check(hist.total > 0, Err::EmptyDataset, "entropy of empty histogram");
    const __int128 n = hist.total;
    __int128 sum = 0;  // scale 2^kScaleBits, weighted by counts
    for (const auto& [cell, cnt] : hist.counts) {
        if (cnt == 0) continue;
        int64_t ratio = (int64_t)round_div(n << kScaleBits, cnt);
        sum += (__int128)cnt * fxp_ln_raw(ratio);
    }
    return fxp_from_raw((int64_t)round_div(sum, n));
}

FixedPoint conditional_entropy(const JointHistogram& hist) {
    check(hist.total > 0, Err::EmptyDataset, "conditional entropy of empty histogram");
    Marginal my = hist.y_marginal();
    const __int128 n = hist.total;
    __int128 sum = 0;
    for (const auto& [key, cnt] : hist.cells) {
        if (cnt == 0) continue;
        uint32_t cy = my.counts.at(key.second);
        int64_t ratio = (int64_t)round_div((__int128)cy << kScaleBits, cnt);
        sum += (__int128)cnt * fxp_ln_raw(ratio);
    }
    return fxp_from_raw((int64_t)round_div(sum, n));
}

FixedPoint mutual_information(const JointHistogram& hist) {
    check(hist.total > 0, Err::EmptyDataset, "mutual information of empty histogram");
    Marginal mx = hist.x_marginal();
    Marginal my = hist.y_marginal();
    const __int128 n = hist.total;
    __int128 sum = 0;
    for (const auto& [key, cnt] : hist.cells) {
        if (cnt == 0) continue;
        __int128 den = (__int128)mx.counts.at(key.first) * my.counts.at(key.second);
        int64_t ratio = (int64_t)round_div(((__int128)cnt * n) << kScaleBits, den);
        sum += (__int128)cnt * fxp_ln_raw(ratio);
    }
    return fxp_from_raw((int64_t)round_div(sum, n));
}

double entropy_float(const Marginal& hist) {
    check(hist.total > 0, Err::EmptyDataset, "entropy of empty histogram");
    double n = (double)hist.total;
    double h = 0;
    for (const auto& [cell, cnt] : hist.counts) {
        if (cnt == 0) continue;
        double p = cnt / n;
        h -= p * std::log(p);
    }
    return h;
}

double conditional_entropy_float(const JointHistogram& hist) {
    check(hist.total > 0, Err::EmptyDataset, "conditional entropy of empty histogram");
    Marginal my = hist.y_marginal();
    double n = (double)hist.total;
    double h = 0;
    for (const auto& [key, cnt] : hist.cells) {
        if (cnt == 0) continue;
        double pxy = cnt / n;
        double py = my.counts.at(key.second) / n;
        h -= pxy * std::log(pxy / py);
    }
    return h;
}

double mutual_information_float(const JointHistogram& hist) {
    check(hist.total > 0, Err::EmptyDataset, "mutual information of empty histogram");
    Marginal mx = hist.x_marginal();
    Marginal my = hist.y_marginal();
    double n = (double)hist.total;
    double mi = 0;
    for (const auto& [key, cnt] : hist.cells) {
        if (cnt == 0) continue;
        double pxy = cnt / n;
        double px = mx.counts.at(key.first) / n;
        double py = my.counts.at(key.second) / n;
        mi += pxy * std::log(pxy / (px * py));
    }
    return mi;
}

MIResult audit_mi(const FxMatrix& x_s, const FxMatrix& y, const BinningSpec& spec_x,
                  const BinningSpec& spec_y) {
    check(x_s.rows == y.rows, Err::ShapeMismatch, "row count mismatch");
    JointHistogram h = build_histogram(x_s, y, spec_x, spec_y);
    MIResult res;
    res.mi_nats = mutual_information(h);
    res.entropy_x_nats = entropy(h.x_marginal());
    res.mi_float = mutual_information_float(h);
    res.entropy_x_float = entropy_float(h.x_marginal());
    if (res.entropy_x_nats.raw == 0) {
        res.ratio = fxp_from_raw(0);
    } else {
        res.ratio = fxp_from_raw(
            (int64_t)round_div((__int128)res.mi_nats.raw << kScaleBits, res.entropy_x_nats.raw));
    }
    check(std::abs(decode(res.mi_nats) - res.mi_float) < 1e-3, Err::HintFailure,
          "fixed-point MI diverged from float path");
    return res;
}

FixedPoint default_threshold(const FixedPoint& entropy_x) {
    check(entropy_x.raw >= 0, Err::DomainError, "negative entropy");
    return fxp_mul(encode(0.4, entropy_x.scale_bits), entropy_x);
}

}  // namespace fiat
