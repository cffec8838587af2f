#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiat/field.hpp"

namespace fiat {

using Var = uint32_t;

struct Term {
    Var var;
    Fe coeff;
};

// Sparse linear combination over witness variables; var 0 is the constant 1.
struct LinComb {
    std::vector<Term> terms;

    LinComb() = default;
    static LinComb variable(Var v) {
        LinComb lc;
        lc.terms.push_back({v, Fe::one()});
        return lc;
    }
    static LinComb constant(const Fe& c) {
        LinComb lc;
        if (!c.is_zero()) lc.terms.push_back({0, c});
        return lc;
    }

    LinComb& add(Var v, const Fe& c) {
        terms.push_back({v, c});
        return *this;
    }
    LinComb& operator+=(const LinComb& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    LinComb operator+(const LinComb& o) const {
        LinComb r = *this;
        r += o;
        return r;
    }
    LinComb operator-(const LinComb& o) const;
    LinComb scaled(const Fe& c) const;
    // Merge duplicate variables and drop zero coefficients.
    void compress();
};

enum class Tag : uint8_t { Hash = 0, Pca = 1, Mi = 2, Enc = 3, Glue = 4 };
const char* tag_name(Tag t);

struct Constraint {
    LinComb a, b, c;  // (a . w) * (b . w) = (c . w)
};

struct ConstraintSystem {
    uint32_t num_vars = 1;  // index 0 is the constant 1
    // Public inputs occupy variables 1..num_public (allocated first).
    std::vector<Var> public_inputs;
    std::vector<Constraint> constraints;
    std::vector<Tag> tags;

    // Structural fingerprint (FNV-1a over the serialized form).
    uint64_t digest() const;
};

struct Witness {
    std::vector<Fe> values;  // length num_vars, values[0] = 1
};

struct SatisfactionReport {
    bool ok = false;
    // Index/tag of the first violated constraint; index -1 with ok=false
    // means a shape or binding failure (see detail).
    int64_t failing_index = -1;
    Tag failing_tag = Tag::Glue;
    std::string detail;
};

// Binds public_values at the public-input positions (overwriting the witness
// copy) and evaluates every constraint, reporting the first failure.
SatisfactionReport is_satisfied(const ConstraintSystem& cs, const Witness& w,
                                const std::vector<Fe>& public_values);

struct TagCount {
    Tag tag;
    uint64_t count;
    double percent;
};
std::vector<TagCount> constraint_report(const ConstraintSystem& cs);

// Versioned binary formats.
std::vector<uint8_t> serialize_constraint_system(const ConstraintSystem& cs);
ConstraintSystem deserialize_constraint_system(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> serialize_witness(const Witness& w);
Witness deserialize_witness(const std::vector<uint8_t>& bytes);

// Gadget-building context. In witness mode every allocation carries a value;
// in structure mode values are ignored and only constraints accumulate.
class R1csBuilder {
public:
    explicit R1csBuilder(bool witnessing) : witnessing_(witnessing) {
        if (witnessing_) wit_.values.push_back(Fe::one());
    }

    bool witnessing() const { return witnessing_; }

    Var alloc() {
        Var v = cs_.num_vars++;
        if (witnessing_) wit_.values.push_back(Fe::zero());
        return v;
    }
    Var alloc_public() {
        Var v = alloc();
        cs_.public_inputs.push_back(v);
        return v;
    }
    void assign(Var v, const Fe& value) {
        if (witnessing_) wit_.values[v] = value;
    }
    const Fe& val(Var v) const { return wit_.values[v]; }
    Fe eval(const LinComb& lc) const;

    void constrain(LinComb a, LinComb b, LinComb c) {
        cs_.constraints.push_back({std::move(a), std::move(b), std::move(c)});
        cs_.tags.push_back(tag_);
    }
    Var materialize(const LinComb& lc);

    void set_tag(Tag t) { tag_ = t; }
    Tag tag() const { return tag_; }

    size_t constraint_count() const { return cs_.constraints.size(); }
    ConstraintSystem& cs() { return cs_; }
    Witness& witness() { return wit_; }

private:
    bool witnessing_;
    ConstraintSystem cs_;
    Witness wit_;
    Tag tag_ = Tag::Glue;
};

// Scoped tag switch.
class TagScope {
public:
    TagScope(R1csBuilder& b, Tag t) : b_(b), saved_(b.tag()) { b_.set_tag(t); }
    ~TagScope() { b_.set_tag(saved_); }

private:
    R1csBuilder& b_;
    Tag saved_;
};

}  // namespace fiat
