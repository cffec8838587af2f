#include "fiat/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fiat/errors.hpp"

namespace fiat {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    check(in.good(), Err::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// RFC-4180 record parser; returns rows of fields including the header.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    size_t i = 0;
    auto push_field = [&]() {
        row.push_back(field_was_quoted ? field : trim(field));
        field.clear();
        field_was_quoted = false;
    };
    auto push_row = [&]() {
        push_field();
        if (!(row.size() == 1 && row[0].empty())) rows.push_back(row);
        row.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            check(field.empty(), Err::ParseError, "quote inside unquoted field");
            quoted = true;
            field_was_quoted = true;
        } else if (c == ',') {
            push_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            push_row();
        } else {
            field.push_back(c);
        }
        ++i;
    }
    check(!quoted, Err::ParseError, "unterminated quoted field");
    if (!field.empty() || !row.empty()) push_row();
    return rows;
}

}  // namespace

size_t Schema::sensitive_count() const {
    size_t n = 0;
    for (const auto& c : columns) n += c.role == ColRole::Sensitive;
    return n;
}

size_t Schema::non_sensitive_count() const { return columns.size() - sensitive_count(); }

RoleConfig parse_role_config_text(const std::string& text) {
    RoleConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        check(eq != std::string::npos, Err::ParseError, "role config line missing '='");
        std::string name = trim(line.substr(0, eq));
        std::string rhs = trim(line.substr(eq + 1));
        size_t comma = rhs.find(',');
        check(comma != std::string::npos, Err::ParseError,
              "role config entry needs '<role>,<kind>'");
        std::string role = trim(rhs.substr(0, comma));
        std::string kind = trim(rhs.substr(comma + 1));
        RoleSpec spec{};
        if (role == "sensitive") {
            spec.role = ColRole::Sensitive;
        } else if (role == "non_sensitive") {
            spec.role = ColRole::NonSensitive;
        } else {
            fail(Err::ParseError, "unknown role '" + role + "'");
        }
        if (kind == "categorical") {
            spec.kind = ColKind::Categorical;
        } else if (kind == "continuous") {
            spec.kind = ColKind::Continuous;
        } else {
            fail(Err::ParseError, "unknown kind '" + kind + "'");
        }
        check(!cfg.count(name), Err::ParseError, "duplicate role config entry " + name);
        cfg[name] = spec;
    }
    return cfg;
}

RoleConfig parse_role_config_file(const std::string& path) {
    return parse_role_config_text(slurp(path));
}

Dataset ingest_csv_text(const std::string& text, const RoleConfig& roles) {
    auto rows = parse_csv(text);
    check(!rows.empty(), Err::EmptyDataset, "csv has no header row");
    const auto& header = rows[0];

    Schema schema;
    for (const auto& name : header) {
        check(!name.empty(), Err::ParseError, "empty column name in header");
        auto it = roles.find(name);
        check(it != roles.end(), Err::SchemaError, "no role configured for column " + name);
        for (const auto& c : schema.columns)
            check(c.name != name, Err::SchemaError, "duplicate column " + name);
        schema.columns.push_back(Column{name, it->second.kind, it->second.role});
    }
    for (const auto& [name, spec] : roles) {
        bool found = false;
        for (const auto& c : schema.columns) found |= c.name == name;
        check(found, Err::SchemaError, "role config names unknown column " + name);
    }
    check(schema.sensitive_count() >= 1, Err::SchemaError, "need at least one sensitive column");
    check(schema.non_sensitive_count() >= 1, Err::SchemaError,
          "need at least one non-sensitive column");

    Dataset d;
    d.schema = schema;
    size_t width = schema.columns.size();
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& rec = rows[r];
        check(rec.size() == width, Err::ParseError,
              "row " + std::to_string(r) + " has wrong field count");
        for (size_t c = 0; c < width; ++c) {
            const std::string& cell = rec[c];
            check(!cell.empty(), Err::ParseError,
                  "missing value at row " + std::to_string(r) + " column " +
                      schema.columns[c].name);
            if (schema.columns[c].kind == ColKind::Categorical) {
                auto& labels = d.schema.category_maps[schema.columns[c].name];
                size_t idx = 0;
                for (; idx < labels.size(); ++idx)
                    if (labels[idx] == cell) break;
                if (idx == labels.size()) labels.push_back(cell);
                d.values.push_back((int64_t)idx << kScaleBits);
            } else {
                double v = 0;
                try {
                    size_t pos = 0;
                    v = std::stod(cell, &pos);
                    check(pos == cell.size(), Err::ParseError, "trailing junk in number");
                } catch (const Error&) {
                    throw;
                } catch (const std::exception&) {
                    fail(Err::ParseError, "bad numeric cell '" + cell + "'");
                }
                d.values.push_back(encode(v).raw);
            }
        }
        ++d.num_rows;
    }
    check(d.num_rows >= 2, Err::EmptyDataset, "need at least two data rows");
    return d;
}

Dataset ingest_csv(const std::string& path, const RoleConfig& roles) {
    return ingest_csv_text(slurp(path), roles);
}

std::pair<FxMatrix, FxMatrix> split(const Dataset& d) {
    size_t n = d.schema.sensitive_count();
    size_t m = d.schema.non_sensitive_count();
    FxMatrix xs(d.num_rows, n), xns(d.num_rows, m);
    for (size_t r = 0; r < d.num_rows; ++r) {
        size_t is = 0, ins = 0;
        for (size_t c = 0; c < d.schema.columns.size(); ++c) {
            if (d.schema.columns[c].role == ColRole::Sensitive) {
                xs.at(r, is++) = d.at(r, c);
            } else {
                xns.at(r, ins++) = d.at(r, c);
            }
        }
    }
    return {xs, xns};
}

std::vector<Fe> canonical_serialize(const Dataset& d) {
    auto [xs, xns] = split(d);
    std::vector<Fe> out;
    out.reserve(3 + xs.a.size() + xns.a.size());
    out.push_back(Fe::from_u64(d.num_rows));
    out.push_back(Fe::from_u64(xs.cols));
    out.push_back(Fe::from_u64(xns.cols));
    for (int64_t v : xs.a) out.push_back(Fe::from_i128(v));
    for (int64_t v : xns.a) out.push_back(Fe::from_i128(v));
    return out;
}

Dataset dataset_from_matrices(const FxMatrix& xs, const FxMatrix& xns) {
    check(xs.rows == xns.rows, Err::ShapeMismatch, "row count mismatch");
    check(xs.cols >= 1 && xns.cols >= 1, Err::SchemaError, "need columns on both sides");
    Dataset d;
    for (size_t c = 0; c < xs.cols; ++c)
        d.schema.columns.push_back(
            Column{"s" + std::to_string(c), ColKind::Continuous, ColRole::Sensitive});
    for (size_t c = 0; c < xns.cols; ++c)
        d.schema.columns.push_back(
            Column{"x" + std::to_string(c), ColKind::Continuous, ColRole::NonSensitive});
    d.num_rows = xs.rows;
    for (size_t r = 0; r < xs.rows; ++r) {
        for (size_t c = 0; c < xs.cols; ++c) d.values.push_back(xs.at(r, c));
        for (size_t c = 0; c < xns.cols; ++c) d.values.push_back(xns.at(r, c));
    }
    return d;
}

}  // namespace fiat
