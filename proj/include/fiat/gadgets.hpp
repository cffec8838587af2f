#pragma once

#include <array>
#include <vector>

#include "fiat/babyjubjub.hpp"
#include "fiat/r1cs.hpp"

namespace fiat {

inline LinComb lc_one() { return LinComb::variable(0); }
inline LinComb lc_const(const Fe& c) { return LinComb::constant(c); }
inline LinComb lc_const_u64(uint64_t c) { return LinComb::constant(Fe::from_u64(c)); }
inline LinComb lc_const_i128(__int128 c) { return LinComb::constant(Fe::from_i128(c)); }
inline LinComb lc_var(Var v) { return LinComb::variable(v); }

// out = x * y
Var g_mul(R1csBuilder& b, const LinComb& x, const LinComb& y);
// a * b = c
void g_assert_mul(R1csBuilder& b, const LinComb& a, const LinComb& bb, const LinComb& c);
// a = b
void g_assert_eq(R1csBuilder& b, const LinComb& a, const LinComb& bb);

void g_assert_bool(R1csBuilder& b, Var v);

// x = sum 2^i b_i with boolean b_i; proves x in [0, 2^bits).
std::vector<Var> g_decompose(R1csBuilder& b, const LinComb& x, int bits);
inline void g_assert_range(R1csBuilder& b, const LinComb& x, int bits) {
    (void)g_decompose(b, x, bits);
}
// |x| <= 2^bits - style band proof for signed values: x + 2^bits in [0, 2^(bits+1)).
inline void g_assert_signed_band(R1csBuilder& b, const LinComb& x, int bits) {
    g_assert_range(b, x + lc_const_i128((__int128)1 << bits), bits + 1);
}

Var g_is_zero(R1csBuilder& b, const LinComb& x);
// bit ? if1 : if0
Var g_select(R1csBuilder& b, Var bit, const LinComb& if1, const LinComb& if0);

// q = round_div(num, den) for a constant positive denominator and signed
// numerator with |q| < 2^mag_bits: 2*num + den = q*2*den + r, 0 <= r < 2*den.
Var g_div_round_const(R1csBuilder& b, const LinComb& num, __int128 den, int mag_bits);

// Poseidon permutation / sponge over linear combinations.
std::array<LinComb, 3> g_poseidon_permute(R1csBuilder& b, std::array<LinComb, 3> state);
LinComb g_poseidon_hash(R1csBuilder& b, const std::vector<LinComb>& input);

// MiMC keystream element for a constant index.
LinComb g_mimc_prf(R1csBuilder& b, const LinComb& key, const Fe& index);

struct LcPoint {
    LinComb x, y;
};

void g_assert_on_curve(R1csBuilder& b, const LcPoint& p);
LcPoint g_jub_add(R1csBuilder& b, const LcPoint& p, const LcPoint& q);
LcPoint g_jub_add_const(R1csBuilder& b, const LcPoint& p, const JubPoint& q);
// Scalar multiplication from little-endian scalar bits.
LcPoint g_jub_mul_const_base(R1csBuilder& b, const std::vector<Var>& bits, const JubPoint& base);
LcPoint g_jub_mul(R1csBuilder& b, const std::vector<Var>& bits, const LcPoint& base);

// Randomized product check A*(B*r) = C*r.
void g_freivalds(R1csBuilder& b, const std::vector<std::vector<LinComb>>& a,
                 const std::vector<std::vector<LinComb>>& bm,
                 const std::vector<std::vector<LinComb>>& c, const std::vector<LinComb>& r);

// Verifies the natural-log hint h (scale 2^20, |value| <= 15) of the positive
// fixed-point q (scale 2^20) by bracketing q between in-circuit fixed-point
// exponentials evaluated at h-2 and h+3 ulps (internal scale 2^40).
void g_ln_check(R1csBuilder& b, const LinComb& q, const LinComb& h);

// Native twin of g_ln_check's predicate (used by tests and hint search).
bool ln_check_native(__int128 q_raw, __int128 h_raw);

// Native Freivalds verification over the field, one repetition per call.
bool freivalds_verify(const std::vector<std::vector<Fe>>& a,
                      const std::vector<std::vector<Fe>>& bm,
                      const std::vector<std::vector<Fe>>& c, std::mt19937_64& rng);

}  // namespace fiat
