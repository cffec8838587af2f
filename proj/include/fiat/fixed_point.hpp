#pragma once

#include <cstdint>

#include "fiat/field.hpp"

namespace fiat {

// Global fixed-point configuration: values are scaled by 2^kScaleBits and must
// stay within a signed kTotalBits-wide band when embedded in the field.
inline constexpr int kScaleBits = 20;
inline constexpr int kTotalBits = 64;
inline constexpr int64_t kFxpOne = int64_t(1) << kScaleBits;

struct FixedPoint {
    int64_t raw = 0;
    int scale_bits = kScaleBits;

    bool operator==(const FixedPoint& o) const {
        return raw == o.raw && scale_bits == o.scale_bits;
    }
};

// floor(a / b) with sign-correct flooring; b > 0.
__int128 floor_div(__int128 a, __int128 b);
// Round-to-nearest with halves toward +inf: floor((2a + b) / (2b)); b > 0.
__int128 round_div(__int128 a, __int128 b);

FixedPoint encode(double x, int scale_bits = kScaleBits);
double decode(const FixedPoint& x);
FixedPoint fxp_from_raw(int64_t raw, int scale_bits = kScaleBits);

FixedPoint fxp_add(const FixedPoint& a, const FixedPoint& b);
FixedPoint fxp_sub(const FixedPoint& a, const FixedPoint& b);
FixedPoint fxp_mul(const FixedPoint& a, const FixedPoint& b);

// Natural logarithm computed natively; the result is the hint value consumed
// by the circuit's exponentiation check. Requires decode(x) > 0.
FixedPoint fxp_ln(const FixedPoint& x);
int64_t fxp_ln_raw(int64_t raw, int scale_bits = kScaleBits);

Fe fxp_to_fe(const FixedPoint& x);
// Rejects raw values in the unrepresentable middle band of [0, p-1].
FixedPoint fxp_from_fe(const Fe& f, int scale_bits = kScaleBits);

}  // namespace fiat
