#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fiat/field.hpp"
#include "fiat/fixed_point.hpp"

namespace fiat {

// Row-major matrix of fixed-point raws (scale kScaleBits).
struct FxMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<int64_t> a;

    FxMatrix() = default;
    FxMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    int64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    int64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    bool operator==(const FxMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

enum class ColKind { Categorical, Continuous };
enum class ColRole { Sensitive, NonSensitive };

struct Column {
    std::string name;
    ColKind kind;
    ColRole role;
};

struct Schema {
    std::vector<Column> columns;
    // Per categorical column: labels in first-appearance order (label -> index).
    std::map<std::string, std::vector<std::string>> category_maps;

    size_t sensitive_count() const;
    size_t non_sensitive_count() const;
};

struct Dataset {
    Schema schema;
    size_t num_rows = 0;
    // num_rows x (n + m) fixed-point raws, schema column order.
    std::vector<int64_t> values;

    int64_t at(size_t row, size_t col) const { return values[row * schema.columns.size() + col]; }
};

struct RoleSpec {
    ColRole role;
    ColKind kind;
};

// Column name -> role/kind. Text format: one "name=<role>,<kind>" entry per line,
// with "#" comments; role in {sensitive, non_sensitive}, kind in
// {categorical, continuous}.
using RoleConfig = std::map<std::string, RoleSpec>;

RoleConfig parse_role_config_text(const std::string& text);
RoleConfig parse_role_config_file(const std::string& path);

// RFC-4180 CSV with a header row. Categorical labels are projected to
// first-appearance indexes; continuous cells are fixed-point encoded.
Dataset ingest_csv(const std::string& path, const RoleConfig& roles);
Dataset ingest_csv_text(const std::string& text, const RoleConfig& roles);

std::pair<FxMatrix, FxMatrix> split(const Dataset& d);

// Deterministic injective flattening: [N, n, m], then row-major sensitive
// values, then row-major non-sensitive values, all as field elements.
std::vector<Fe> canonical_serialize(const Dataset& d);

// Assembles a Dataset from raw matrices (test and tooling convenience).
Dataset dataset_from_matrices(const FxMatrix& xs, const FxMatrix& xns);

}  // namespace fiat
