#include "fiat/babyjubjub.hpp"

#include "fiat/errors.hpp"

namespace fiat {

namespace {

// Extended twisted Edwards coordinates: x = X/Z, y = Y/Z, T = X*Y/Z.
struct Ext {
    Fe x, y, z, t;
};

Ext to_ext(const JubPoint& p) { return Ext{p.x, p.y, Fe::one(), p.x * p.y}; }

JubPoint to_affine(const Ext& e) {
    Fe zi = e.z.inv();
    return JubPoint{e.x * zi, e.y * zi};
}

// Unified addition (complete on Baby Jubjub: a is a square, d is not).
Ext ext_add(const Ext& p, const Ext& q) {
    Fe a = p.x * q.x;
    Fe b = p.y * q.y;
    Fe c = jub_d() * p.t * q.t;
    Fe d = p.z * q.z;
    Fe e = (p.x + p.y) * (q.x + q.y) - a - b;
    Fe f = d - c;
    Fe g = d + c;
    Fe h = b - jub_a() * a;
    return Ext{e * f, g * h, f * g, e * h};
}

U256 u256_from_decimal_checked(const char* s) { return U256::from_decimal(s); }

}  // namespace

const Fe& jub_a() {
    static const Fe a = Fe::from_u64(168700);
    return a;
}

const Fe& jub_d() {
    static const Fe d = Fe::from_u64(168696);
    return d;
}

const JubPoint& jub_generator() {
    static const JubPoint g = {
        Fe::from_decimal(
            "5299619240641551281634865583518297030282874472190772894086521144482721001553"),
        Fe::from_decimal(
            "16950150798460657717958625567821834550301663161624707787222815936182638968203")};
    return g;
}

const U256& jub_subgroup_order() {
    static const U256 l = u256_from_decimal_checked(
        "2736030358979909402780800718157159386076813972158567259200215660948447373041");
    return l;
}

bool jub_on_curve(const JubPoint& p) {
    Fe x2 = p.x * p.x;
    Fe y2 = p.y * p.y;
    return jub_a() * x2 + y2 == Fe::one() + jub_d() * x2 * y2;
}

bool jub_in_subgroup(const JubPoint& p) {
    if (!jub_on_curve(p)) return false;
    return jub_mul(jub_subgroup_order(), p).is_identity();
}

JubPoint jub_add(const JubPoint& a, const JubPoint& b) {
    return to_affine(ext_add(to_ext(a), to_ext(b)));
}

JubPoint jub_mul(const U256& scalar, const JubPoint& p) {
    Ext acc = to_ext(JubPoint::identity());
    Ext base = to_ext(p);
    bool any = false;
    for (int i = 255; i >= 0; --i)
        if (scalar.bit(i)) {
            any = true;
            break;
        }
    if (!any) return JubPoint::identity();
    int top = 255;
    while (!scalar.bit(top)) --top;
    for (int i = top; i >= 0; --i) {
        acc = ext_add(acc, acc);
        if (scalar.bit(i)) acc = ext_add(acc, base);
    }
    return to_affine(acc);
}

U256 jub_random_scalar(std::mt19937_64& rng) {
    const U256& l = jub_subgroup_order();
    while (true) {
        U256 v;
        for (int i = 0; i < 4; ++i) v.w[i] = rng();
        v.w[3] &= (uint64_t(1) << 60) - 1;  // l < 2^251; trim to speed rejection
        if (!v.is_zero() && v < l) return v;
    }
}

KeyPair jub_keygen(std::mt19937_64& rng) {
    U256 sk = jub_random_scalar(rng);
    return KeyPair{sk, jub_mul(sk, jub_generator())};
}

Fe ecdh(const U256& sk, const JubPoint& pk) {
    check(jub_in_subgroup(pk), Err::InvalidPoint, "peer key not in prime-order subgroup");
    JubPoint shared = jub_mul(sk, pk);
    return shared.x;
}

}  // namespace fiat
