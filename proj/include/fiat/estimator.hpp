#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fiat/dataset.hpp"
#include "fiat/fixed_point.hpp"

namespace fiat {

// Hypercube binning: one cell width (bandwidth) and grid anchor per dimension,
// with indexes clamped to [0, intervals_per_dim - 1].
struct BinningSpec {
    std::vector<int64_t> bandwidth_raw;  // all > 0
    std::vector<int64_t> origin_raw;     // defaults to zeros
    int intervals_per_dim = 10;

    void validate() const;
    // origin = per-dimension minimum, bandwidth = ceil(range / intervals)
    // (at least one ulp), the audit-pipeline default.
    static BinningSpec from_data(const FxMatrix& x, int intervals = 10);
};

using CellIndex = std::vector<uint8_t>;

std::vector<int> bin_index(const std::vector<int64_t>& xraw, const BinningSpec& spec);

struct Marginal {
    std::map<CellIndex, uint32_t> counts;
    uint64_t total = 0;
};

struct JointHistogram {
    std::map<std::pair<CellIndex, CellIndex>, uint32_t> cells;
    uint64_t total = 0;

    Marginal x_marginal() const;
    Marginal y_marginal() const;
    JointHistogram transposed() const;
};

JointHistogram build_histogram(const FxMatrix& x, const FxMatrix& y,
                               const BinningSpec& spec_x, const BinningSpec& spec_y);

// Fixed-point estimators. These mirror the audit circuit bit for bit: counts
// stay integral, each logarithm argument is one round_div, and the single
// final division by N uses round_div as well.
FixedPoint entropy(const Marginal& hist);
FixedPoint conditional_entropy(const JointHistogram& hist);
FixedPoint mutual_information(const JointHistogram& hist);

// Floating-point reference path.
double entropy_float(const Marginal& hist);
double conditional_entropy_float(const JointHistogram& hist);
double mutual_information_float(const JointHistogram& hist);

struct MIResult {
    FixedPoint mi_nats;
    FixedPoint entropy_x_nats;
    FixedPoint ratio;  // mi / entropy; 0 when entropy is 0
    double mi_float = 0;
    double entropy_x_float = 0;
};

MIResult audit_mi(const FxMatrix& x_s, const FxMatrix& y, const BinningSpec& spec_x,
                  const BinningSpec& spec_y);

FixedPoint default_threshold(const FixedPoint& entropy_x);

}  // namespace fiat
