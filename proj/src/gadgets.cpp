#include "fiat/gadgets.hpp"

#include <cmath>

#include "fiat/detail/poseidon_params.hpp"
#include "fiat/detail/mimc_params.hpp"
#include "fiat/errors.hpp"
#include "fiat/fixed_point.hpp"

namespace fiat {

namespace {

constexpr int kLcMaterializeThreshold = 24;

LinComb compact(R1csBuilder& b, LinComb lc) {
    lc.compress();
    if ((int)lc.terms.size() > kLcMaterializeThreshold) return lc_var(b.materialize(lc));
    return lc;
}

}  // namespace

Var g_mul(R1csBuilder& b, const LinComb& x, const LinComb& y) {
    Var out = b.alloc();
    if (b.witnessing()) b.assign(out, b.eval(x) * b.eval(y));
    b.constrain(x, y, lc_var(out));
    return out;
}

void g_assert_mul(R1csBuilder& b, const LinComb& a, const LinComb& bb, const LinComb& c) {
    b.constrain(a, bb, c);
}

void g_assert_eq(R1csBuilder& b, const LinComb& a, const LinComb& bb) {
    b.constrain(a - bb, lc_one(), LinComb());
}

void g_assert_bool(R1csBuilder& b, Var v) {
    b.constrain(lc_var(v), lc_var(v) - lc_one(), LinComb());
}

std::vector<Var> g_decompose(R1csBuilder& b, const LinComb& x, int bits) {
    check(bits >= 1 && bits <= 200, Err::ShapeError, "unsupported decomposition width");
    std::vector<Var> out;
    out.reserve(bits);
    U256 v;
    if (b.witnessing()) {
        v = b.eval(x).canonical();
        for (int i = bits; i < 256; ++i)
            check(!v.bit(i), Err::HintFailure, "value exceeds decomposition range");
    }
    LinComb sum;
    Fe two = Fe::from_u64(2);
    Fe coeff = Fe::one();
    for (int i = 0; i < bits; ++i) {
        Var bit = b.alloc();
        if (b.witnessing()) b.assign(bit, v.bit(i) ? Fe::one() : Fe::zero());
        g_assert_bool(b, bit);
        sum.add(bit, coeff);
        coeff *= two;
        out.push_back(bit);
    }
    g_assert_eq(b, sum, x);
    return out;
}

Var g_is_zero(R1csBuilder& b, const LinComb& x) {
    Var z = b.alloc();
    Var inv = b.alloc();
    if (b.witnessing()) {
        Fe v = b.eval(x);
        b.assign(z, v.is_zero() ? Fe::one() : Fe::zero());
        b.assign(inv, v.is_zero() ? Fe::zero() : v.inv());
    }
    b.constrain(x, lc_var(inv), lc_one() - lc_var(z));
    b.constrain(x, lc_var(z), LinComb());
    return z;
}

Var g_select(R1csBuilder& b, Var bit, const LinComb& if1, const LinComb& if0) {
    Var out = b.alloc();
    if (b.witnessing())
        b.assign(out, b.val(bit).is_zero() ? b.eval(if0) : b.eval(if1));
    b.constrain(lc_var(bit), if1 - if0, lc_var(out) - if0);
    return out;
}

Var g_div_round_const(R1csBuilder& b, const LinComb& num, __int128 den, int mag_bits) {
    check(den > 0, Err::ShapeError, "division by non-positive constant");
    Var q = b.alloc();
    Var r = b.alloc();
    if (b.witnessing()) {
        __int128 nv = b.eval(num).to_i128();
        __int128 qv = round_div(nv, den);
        __int128 rv = 2 * nv + den - qv * 2 * den;
        b.assign(q, Fe::from_i128(qv));
        b.assign(r, Fe::from_i128(rv));
    }
    // 2*num + den = q*2*den + r
    LinComb lhs = num.scaled(Fe::from_u64(2)) + lc_const_i128(den);
    LinComb rhs = lc_var(q).scaled(Fe::from_i128(2 * den)) + lc_var(r);
    g_assert_eq(b, lhs, rhs);
    int rbits = 1;
    while (((__int128)1 << rbits) < 2 * den) ++rbits;
    g_assert_range(b, lc_var(r), rbits);
    g_assert_range(b, lc_const_i128(2 * den - 1) - lc_var(r), rbits);
    g_assert_signed_band(b, lc_var(q), mag_bits);
    return q;
}

std::array<LinComb, 3> g_poseidon_permute(R1csBuilder& b, std::array<LinComb, 3> state) {
    static const std::vector<Fe>* rc = nullptr;
    static const std::array<std::array<Fe, 3>, 3>* mds = nullptr;
    if (!rc) {
        auto* v = new std::vector<Fe>();
        for (const char* s : detail::kPoseidonRoundConstants) v->push_back(Fe::from_decimal(s));
        rc = v;
        auto* m = new std::array<std::array<Fe, 3>, 3>();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) (*m)[i][j] = Fe::from_decimal(detail::kPoseidonMds[i][j]);
        mds = m;
    }
    const int rf = detail::kPoseidonFullRounds;
    const int rp = detail::kPoseidonPartialRounds;
    const int half = rf / 2;
    size_t rc_at = 0;
    auto sbox = [&](const LinComb& x) {
        Var x2 = g_mul(b, x, x);
        Var x4 = g_mul(b, lc_var(x2), lc_var(x2));
        return lc_var(g_mul(b, lc_var(x4), x));
    };
    for (int round = 0; round < rf + rp; ++round) {
        for (int i = 0; i < 3; ++i) state[i] += lc_const((*rc)[rc_at++]);
        if (round < half || round >= half + rp) {
            for (int i = 0; i < 3; ++i) state[i] = sbox(state[i]);
        } else {
            state[0] = sbox(state[0]);
        }
        std::array<LinComb, 3> mixed;
        for (int i = 0; i < 3; ++i) {
            mixed[i] = state[0].scaled((*mds)[i][0]) + state[1].scaled((*mds)[i][1]) +
                       state[2].scaled((*mds)[i][2]);
            mixed[i] = compact(b, std::move(mixed[i]));
        }
        state = mixed;
    }
    return state;
}

LinComb g_poseidon_hash(R1csBuilder& b, const std::vector<LinComb>& input) {
    std::array<LinComb, 3> state = {lc_const_u64(input.size()), LinComb(), LinComb()};
    size_t chunks = input.empty() ? 1 : (input.size() + 1) / 2;
    for (size_t c = 0; c < chunks; ++c) {
        size_t i0 = 2 * c, i1 = 2 * c + 1;
        if (i0 < input.size()) state[1] += input[i0];
        if (i1 < input.size()) state[2] += input[i1];
        state[1] = compact(b, std::move(state[1]));
        state[2] = compact(b, std::move(state[2]));
        state = g_poseidon_permute(b, state);
    }
    return state[0];
}

LinComb g_mimc_prf(R1csBuilder& b, const LinComb& key, const Fe& index) {
    static const std::vector<Fe>* rc = nullptr;
    if (!rc) {
        auto* v = new std::vector<Fe>();
        for (const char* s : detail::kMimcRoundConstants) v->push_back(Fe::from_decimal(s));
        rc = v;
    }
    LinComb x = lc_const(index);
    for (const Fe& c : *rc) {
        LinComb t = compact(b, x + key + lc_const(c));
        Var t2 = g_mul(b, t, t);
        Var t4 = g_mul(b, lc_var(t2), lc_var(t2));
        Var t6 = g_mul(b, lc_var(t2), lc_var(t4));
        x = lc_var(g_mul(b, lc_var(t6), t));
    }
    return x + key;
}

void g_assert_on_curve(R1csBuilder& b, const LcPoint& p) {
    Var x2 = g_mul(b, p.x, p.x);
    Var y2 = g_mul(b, p.y, p.y);
    Var x2y2 = g_mul(b, lc_var(x2), lc_var(y2));
    g_assert_eq(b, lc_var(x2).scaled(jub_a()) + lc_var(y2),
                lc_one() + lc_var(x2y2).scaled(jub_d()));
}

LcPoint g_jub_add(R1csBuilder& b, const LcPoint& p, const LcPoint& q) {
    Var xx = g_mul(b, p.x, q.x);
    Var yy = g_mul(b, p.y, q.y);
    Var xy = g_mul(b, p.x, q.y);
    Var yx = g_mul(b, p.y, q.x);
    Var prod = g_mul(b, lc_var(xx), lc_var(yy));
    LinComb u = lc_one() + lc_var(prod).scaled(jub_d());
    LinComb v = lc_one() - lc_var(prod).scaled(jub_d());
    Var x3 = b.alloc();
    Var y3 = b.alloc();
    if (b.witnessing()) {
        Fe uu = b.eval(u), vv = b.eval(v);
        b.assign(x3, (b.val(xy) + b.val(yx)) * uu.inv());
        b.assign(y3, (b.val(yy) - jub_a() * b.val(xx)) * vv.inv());
    }
    b.constrain(lc_var(x3), u, lc_var(xy) + lc_var(yx));
    b.constrain(lc_var(y3), v, lc_var(yy) - lc_var(xx).scaled(jub_a()));
    return {lc_var(x3), lc_var(y3)};
}

LcPoint g_jub_add_const(R1csBuilder& b, const LcPoint& p, const JubPoint& q) {
    Var u = g_mul(b, p.x, p.y);
    Fe dq = jub_d() * q.x * q.y;
    LinComb den_x = lc_one() + lc_var(u).scaled(dq);
    LinComb den_y = lc_one() - lc_var(u).scaled(dq);
    LinComb num_x = p.x.scaled(q.y) + p.y.scaled(q.x);
    LinComb num_y = p.y.scaled(q.y) - p.x.scaled(jub_a() * q.x);
    Var x3 = b.alloc();
    Var y3 = b.alloc();
    if (b.witnessing()) {
        b.assign(x3, b.eval(num_x) * b.eval(den_x).inv());
        b.assign(y3, b.eval(num_y) * b.eval(den_y).inv());
    }
    b.constrain(lc_var(x3), den_x, num_x);
    b.constrain(lc_var(y3), den_y, num_y);
    return {lc_var(x3), lc_var(y3)};
}

LcPoint g_jub_mul_const_base(R1csBuilder& b, const std::vector<Var>& bits, const JubPoint& base) {
    LcPoint acc{LinComb(), lc_one()};  // identity
    JubPoint power = base;
    for (size_t i = 0; i < bits.size(); ++i) {
        LcPoint added = g_jub_add_const(b, acc, power);
        acc.x = lc_var(g_select(b, bits[i], added.x, acc.x));
        acc.y = lc_var(g_select(b, bits[i], added.y, acc.y));
        power = jub_add(power, power);
    }
    return acc;
}

LcPoint g_jub_mul(R1csBuilder& b, const std::vector<Var>& bits, const LcPoint& base) {
    LcPoint acc{LinComb(), lc_one()};
    LcPoint cur = base;
    for (size_t i = 0; i < bits.size(); ++i) {
        LcPoint added = g_jub_add(b, acc, cur);
        acc.x = lc_var(g_select(b, bits[i], added.x, acc.x));
        acc.y = lc_var(g_select(b, bits[i], added.y, acc.y));
        if (i + 1 < bits.size()) cur = g_jub_add(b, cur, cur);
    }
    return acc;
}

void g_freivalds(R1csBuilder& b, const std::vector<std::vector<LinComb>>& a,
                 const std::vector<std::vector<LinComb>>& bm,
                 const std::vector<std::vector<LinComb>>& c, const std::vector<LinComb>& r) {
    size_t m1 = a.size();
    check(m1 >= 1, Err::ShapeError, "empty matrix");
    size_t m2 = a[0].size();
    check(bm.size() == m2 && !bm.empty(), Err::ShapeError, "inner dimension mismatch");
    size_t m3 = bm[0].size();
    check(c.size() == m1 && c[0].size() == m3 && r.size() == m3, Err::ShapeError,
          "output dimension mismatch");

    std::vector<LinComb> br(m2);
    for (size_t i = 0; i < m2; ++i) {
        LinComb acc;
        for (size_t j = 0; j < m3; ++j) acc += lc_var(g_mul(b, bm[i][j], r[j]));
        br[i] = compact(b, std::move(acc));
    }
    for (size_t i = 0; i < m1; ++i) {
        LinComb abr;
        for (size_t j = 0; j < m2; ++j) abr += lc_var(g_mul(b, a[i][j], br[j]));
        LinComb cr;
        for (size_t j = 0; j < m3; ++j) cr += lc_var(g_mul(b, c[i][j], r[j]));
        abr.compress();
        cr.compress();
        g_assert_eq(b, abr, cr);
    }
}

bool freivalds_verify(const std::vector<std::vector<Fe>>& a,
                      const std::vector<std::vector<Fe>>& bm,
                      const std::vector<std::vector<Fe>>& c, std::mt19937_64& rng) {
    size_t m1 = a.size(), m2 = bm.size(), m3 = bm[0].size();
    std::vector<Fe> r(m3);
    for (auto& v : r) v = Fe::from_u64(rng()) * Fe::from_u64(rng()) + Fe::from_u64(rng());
    std::vector<Fe> br(m2);
    for (size_t i = 0; i < m2; ++i) {
        Fe acc;
        for (size_t j = 0; j < m3; ++j) acc += bm[i][j] * r[j];
        br[i] = acc;
    }
    for (size_t i = 0; i < m1; ++i) {
        Fe abr;
        for (size_t j = 0; j < m2; ++j) abr += a[i][j] * br[j];
        Fe cr;
        for (size_t j = 0; j < m3; ++j) cr += c[i][j] * r[j];
        if (abr != cr) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Logarithm-hint verification via fixed-point exponentiation.

namespace {

using u128 = unsigned __int128;

constexpr int kLnShiftValue = 16;                               // e^{+-16} domain
constexpr int64_t kLnShiftRaw = (int64_t)kLnShiftValue << 20;   // 2^24
constexpr int kLnChunks = 6;                                    // 4-bit chunks of u

struct LnTables {
    u128 chunk[kLnChunks][16];
    u128 bit24;  // e^16 * 2^40
    u128 e16c;   // e^16 * 2^40
    u128 k5c;    // e^(5 * 2^-20) * 2^40
    Fe fe_chunk[kLnChunks][16];
    Fe fe_bit24, fe_e16c, fe_k5c;

    LnTables() {
        auto fix40 = [](long double x) {
            long double v = expl(x) * 1099511627776.0L;  // 2^40
            return (u128)(v + 0.5L);
        };
        for (int i = 0; i < kLnChunks; ++i) {
            for (int v = 0; v < 16; ++v) {
                chunk[i][v] = fix40(ldexpl((long double)v, 4 * i - 20));
                fe_chunk[i][v] = Fe::from_i128((__int128)chunk[i][v]);
            }
        }
        bit24 = fix40((long double)kLnShiftValue);
        e16c = bit24;
        k5c = fix40(ldexpl(5.0L, -20));
        fe_bit24 = Fe::from_i128((__int128)bit24);
        fe_e16c = fe_bit24;
        fe_k5c = Fe::from_i128((__int128)k5c);
    }
};

const LnTables& ln_tables() {
    static const LnTables t;
    return t;
}

// Native evaluation of the in-circuit exponential at u (raw, shifted by e^16).
u128 ln_exp40(u128 u) {
    const LnTables& t = ln_tables();
    u128 acc = t.chunk[0][u & 15];
    for (int i = 1; i < kLnChunks; ++i) {
        u128 sel = t.chunk[i][(u >> (4 * i)) & 15];
        acc = (acc * sel) >> 40;
    }
    u128 sel = (u >> 24) & 1 ? t.bit24 : ((u128)1 << 40);
    return (acc * sel) >> 40;
}

}  // namespace

bool ln_check_native(__int128 q_raw, __int128 h_raw) {
    if (q_raw <= 0) return false;
    __int128 u = h_raw + (kLnShiftRaw - 2);
    if (u < 0 || u >= ((__int128)1 << 25)) return false;
    const LnTables& t = ln_tables();
    u128 e = ln_exp40((u128)u);
    // LO: e * 2^20 <= q * E16C
    if ((e << 20) > (u128)q_raw * t.e16c) return false;
    // HI: q * E16C * 2^20 < e * K5C  (both sides below 2^127)
    return ((u128)q_raw * t.e16c) << 20 < e * t.k5c;
}

void g_ln_check(R1csBuilder& b, const LinComb& q, const LinComb& h) {
    const LnTables& t = ln_tables();
    LinComb u_lc = h + lc_const_i128(kLnShiftRaw - 2);

    __int128 u_val = 0;
    if (b.witnessing()) {
        u_val = b.eval(u_lc).to_i128();
        check(u_val >= 0 && u_val < ((__int128)1 << 25), Err::HintFailure,
              "ln hint outside e^16 domain");
    }

    // Chunk one-hots and the selected table entries.
    LinComb u_sum;
    std::vector<LinComb> selected;
    for (int i = 0; i < kLnChunks; ++i) {
        int cv = (int)((u_val >> (4 * i)) & 15);
        LinComb sel, ones, weighted;
        for (int v = 0; v < 16; ++v) {
            Var o = b.alloc();
            if (b.witnessing()) b.assign(o, v == cv ? Fe::one() : Fe::zero());
            g_assert_bool(b, o);
            ones.add(o, Fe::one());
            weighted.add(o, Fe::from_u64((uint64_t)v));
            sel.add(o, t.fe_chunk[i][v]);
        }
        g_assert_eq(b, ones, lc_one());
        u_sum += weighted.scaled(Fe::from_u64(1ULL << (4 * i)));
        selected.push_back(sel);
    }
    Var b24 = b.alloc();
    if (b.witnessing()) b.assign(b24, ((u_val >> 24) & 1) ? Fe::one() : Fe::zero());
    g_assert_bool(b, b24);
    u_sum.add(b24, Fe::from_u64(1ULL << 24));
    g_assert_eq(b, u_sum, u_lc);
    LinComb sel24 = lc_const_i128((__int128)1 << 40) +
                    lc_var(b24).scaled(t.fe_bit24 - Fe::from_i128((__int128)1 << 40));

    // Running product with floor division by 2^40 each step.
    LinComb acc = selected[0];
    u128 acc_val = 0;
    if (b.witnessing()) acc_val = t.chunk[0][u_val & 15];
    auto mul_step = [&](const LinComb& sel, u128 sel_val) {
        Var q40 = b.alloc();
        Var r40 = b.alloc();
        if (b.witnessing()) {
            u128 prod = acc_val * sel_val;
            acc_val = prod >> 40;
            b.assign(q40, Fe::from_i128((__int128)acc_val));
            b.assign(r40, Fe::from_i128((__int128)(prod & (((u128)1 << 40) - 1))));
        }
        b.constrain(acc, sel,
                    lc_var(q40).scaled(Fe::from_i128((__int128)1 << 40)) + lc_var(r40));
        g_assert_range(b, lc_var(r40), 40);
        g_assert_range(b, lc_var(q40), 87);
        acc = lc_var(q40);
    };
    for (int i = 1; i < kLnChunks; ++i) {
        u128 sv = b.witnessing() ? t.chunk[i][(u_val >> (4 * i)) & 15] : 0;
        mul_step(selected[i], sv);
    }
    {
        u128 sv = b.witnessing()
                      ? (((u_val >> 24) & 1) ? t.bit24 : ((u128)1 << 40))
                      : 0;
        mul_step(sel24, sv);
    }

    // LO: q * E16C - acc * 2^20 >= 0
    LinComb lo = q.scaled(t.fe_e16c) - acc.scaled(Fe::from_i128((__int128)1 << 20));
    g_assert_range(b, lo, 107);
    // HI: acc * K5C - q * E16C * 2^20 - 1 >= 0
    LinComb hi = acc.scaled(t.fe_k5c) -
                 q.scaled(t.fe_e16c * Fe::from_i128((__int128)1 << 20)) - lc_one();
    g_assert_range(b, hi, 128);
}

}  // namespace fiat
