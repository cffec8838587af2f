#include "fiat/r1cs.hpp"

#include <algorithm>
#include <cstring>

#include "fiat/errors.hpp"

namespace fiat {

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::Hash: return "hash";
        case Tag::Pca: return "pca";
        case Tag::Mi: return "mi";
        case Tag::Enc: return "enc";
        case Tag::Glue: return "glue";
    }
    return "?";
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb r = *this;
    for (const Term& t : o.terms) r.terms.push_back({t.var, t.coeff.neg()});
    return r;
}

LinComb LinComb::scaled(const Fe& c) const {
    LinComb r;
    if (c.is_zero()) return r;
    r.terms.reserve(terms.size());
    for (const Term& t : terms) r.terms.push_back({t.var, t.coeff * c});
    return r;
}

void LinComb::compress() {
    if (terms.size() <= 1) return;
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const Term& t : terms) {
        if (!out.empty() && out.back().var == t.var) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff.is_zero(); }),
              out.end());
    terms = std::move(out);
}

Fe R1csBuilder::eval(const LinComb& lc) const {
    Fe acc;
    for (const Term& t : lc.terms) acc += t.coeff * wit_.values[t.var];
    return acc;
}

Var R1csBuilder::materialize(const LinComb& lc) {
    Var v = alloc();
    if (witnessing_) assign(v, eval(lc));
    constrain(lc, LinComb::variable(0), LinComb::variable(v));
    return v;
}

SatisfactionReport is_satisfied(const ConstraintSystem& cs, const Witness& w,
                                const std::vector<Fe>& public_values) {
    SatisfactionReport rep;
    if (w.values.size() != cs.num_vars) {
        rep.detail = "witness length mismatch";
        return rep;
    }
    if (public_values.size() != cs.public_inputs.size()) {
        rep.detail = "public input count mismatch";
        return rep;
    }
    if (w.values.empty() || !(w.values[0] == Fe::one())) {
        rep.detail = "witness slot 0 must be 1";
        return rep;
    }
    Witness bound = w;
    for (size_t i = 0; i < public_values.size(); ++i)
        bound.values[cs.public_inputs[i]] = public_values[i];

    auto eval = [&](const LinComb& lc) {
        Fe acc;
        for (const Term& t : lc.terms) acc += t.coeff * bound.values[t.var];
        return acc;
    };
    for (size_t i = 0; i < cs.constraints.size(); ++i) {
        const Constraint& c = cs.constraints[i];
        if (eval(c.a) * eval(c.b) != eval(c.c)) {
            rep.failing_index = (int64_t)i;
            rep.failing_tag = cs.tags[i];
            rep.detail = std::string("constraint ") + std::to_string(i) + " (" +
                         tag_name(cs.tags[i]) + ") violated";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

std::vector<TagCount> constraint_report(const ConstraintSystem& cs) {
    uint64_t counts[5] = {0, 0, 0, 0, 0};
    for (Tag t : cs.tags) counts[(int)t]++;
    std::vector<TagCount> out;
    double total = (double)cs.constraints.size();
    for (int i = 0; i < 5; ++i)
        out.push_back({(Tag)i, counts[i], total > 0 ? 100.0 * counts[i] / total : 0.0});
    return out;
}

namespace {

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back((uint8_t)(v >> (8 * i)));
}

void put_fe(std::vector<uint8_t>& b, const Fe& f) {
    U256 c = f.canonical();
    for (int limb = 0; limb < 4; ++limb)
        for (int i = 0; i < 8; ++i) b.push_back((uint8_t)(c.w[limb] >> (8 * i)));
}

struct Reader {
    const std::vector<uint8_t>& b;
    size_t at = 0;

    uint8_t u8() {
        check(at + 1 <= b.size(), Err::MalformedProof, "truncated stream");
        return b[at++];
    }
    uint32_t u32() {
        check(at + 4 <= b.size(), Err::MalformedProof, "truncated stream");
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= (uint32_t)b[at++] << (8 * i);
        return v;
    }
    Fe fe() {
        check(at + 32 <= b.size(), Err::MalformedProof, "truncated stream");
        U256 c;
        for (int limb = 0; limb < 4; ++limb) {
            uint64_t w = 0;
            for (int i = 0; i < 8; ++i) w |= (uint64_t)b[at++] << (8 * i);
            c.w[limb] = w;
        }
        return Fe::from_canonical(c);
    }
};

void put_lincomb(std::vector<uint8_t>& b, const LinComb& lc) {
    put_u32(b, (uint32_t)lc.terms.size());
    for (const Term& t : lc.terms) {
        put_u32(b, t.var);
        put_fe(b, t.coeff);
    }
}

LinComb get_lincomb(Reader& r) {
    LinComb lc;
    uint32_t n = r.u32();
    lc.terms.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        Var v = r.u32();
        Fe c = r.fe();
        lc.terms.push_back({v, c});
    }
    return lc;
}

constexpr char kMagic[5] = {'F', 'R', '1', 'C', 'S'};

}  // namespace

std::vector<uint8_t> serialize_constraint_system(const ConstraintSystem& cs) {
    std::vector<uint8_t> b;
    b.insert(b.end(), kMagic, kMagic + 5);
    b.push_back(1);  // version
    {
        // field modulus bytes (little-endian)
        U256 p = Fe::modulus();
        for (int limb = 0; limb < 4; ++limb)
            for (int i = 0; i < 8; ++i) b.push_back((uint8_t)(p.w[limb] >> (8 * i)));
    }
    put_u32(b, cs.num_vars);
    put_u32(b, (uint32_t)cs.public_inputs.size());
    put_u32(b, (uint32_t)cs.constraints.size());
    for (const Constraint& c : cs.constraints) {
        put_lincomb(b, c.a);
        put_lincomb(b, c.b);
        put_lincomb(b, c.c);
    }
    for (Tag t : cs.tags) b.push_back((uint8_t)t);
    return b;
}

ConstraintSystem deserialize_constraint_system(const std::vector<uint8_t>& bytes) {
    Reader r{bytes};
    for (char m : kMagic) check(r.u8() == (uint8_t)m, Err::MalformedProof, "bad FR1CS magic");
    check(r.u8() == 1, Err::MalformedProof, "unsupported FR1CS version");
    U256 p;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t w = 0;
        for (int i = 0; i < 8; ++i) w |= (uint64_t)r.u8() << (8 * i);
        p.w[limb] = w;
    }
    check(p == Fe::modulus(), Err::MalformedProof, "field modulus mismatch");
    ConstraintSystem cs;
    cs.num_vars = r.u32();
    uint32_t num_public = r.u32();
    uint32_t num_constraints = r.u32();
    cs.public_inputs.resize(num_public);
    for (uint32_t i = 0; i < num_public; ++i) cs.public_inputs[i] = i + 1;
    cs.constraints.resize(num_constraints);
    for (uint32_t i = 0; i < num_constraints; ++i) {
        cs.constraints[i].a = get_lincomb(r);
        cs.constraints[i].b = get_lincomb(r);
        cs.constraints[i].c = get_lincomb(r);
        for (const auto* lc : {&cs.constraints[i].a, &cs.constraints[i].b, &cs.constraints[i].c})
            for (const Term& t : lc->terms)
                check(t.var < cs.num_vars, Err::MalformedProof, "variable index out of range");
    }
    cs.tags.resize(num_constraints);
    for (uint32_t i = 0; i < num_constraints; ++i) {
        uint8_t t = r.u8();
        check(t <= 4, Err::MalformedProof, "bad tag byte");
        cs.tags[i] = (Tag)t;
    }
    check(r.at == bytes.size(), Err::MalformedProof, "trailing bytes in FR1CS stream");
    return cs;
}

std::vector<uint8_t> serialize_witness(const Witness& w) {
    std::vector<uint8_t> b;
    put_u32(b, (uint32_t)w.values.size());
    for (const Fe& v : w.values) put_fe(b, v);
    return b;
}

Witness deserialize_witness(const std::vector<uint8_t>& bytes) {
    Reader r{bytes};
    uint32_t n = r.u32();
    check(bytes.size() == 4 + (size_t)n * 32, Err::MalformedProof, "bad witness length");
    Witness w;
    w.values.reserve(n);
    for (uint32_t i = 0; i < n; ++i) w.values.push_back(r.fe());
    return w;
}

uint64_t ConstraintSystem::digest() const {
    auto bytes = serialize_constraint_system(*this);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace fiat
