#include "fiat/fixed_point.hpp"

#include <cmath>
#include <limits>

#include "fiat/errors.hpp"

namespace fiat {

namespace {

constexpr __int128 kRangeHalf = (__int128)1 << (kTotalBits - 1);

int64_t narrow_checked(__int128 v, const char* what) {
    check(v < kRangeHalf && v > -kRangeHalf, Err::RangeOverflow, what);
    return (int64_t)v;
}

}  // namespace

__int128 floor_div(__int128 a, __int128 b) {
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

__int128 round_div(__int128 a, __int128 b) { return floor_div(2 * a + b, 2 * b); }

FixedPoint encode(double x, int scale_bits) {
    check(std::isfinite(x), Err::RangeOverflow, "encode of non-finite value");
    double scaled = std::ldexp(x, scale_bits);
    check(std::abs(scaled) < std::ldexp(1.0, kTotalBits - 1), Err::RangeOverflow,
          "value exceeds fixed-point range");
    return FixedPoint{(int64_t)std::llround(scaled), scale_bits};
}

double decode(const FixedPoint& x) { return std::ldexp((double)x.raw, -x.scale_bits); }

FixedPoint fxp_from_raw(int64_t raw, int scale_bits) { return FixedPoint{raw, scale_bits}; }

FixedPoint fxp_add(const FixedPoint& a, const FixedPoint& b) {
    check(a.scale_bits == b.scale_bits, Err::ShapeMismatch, "mixed fixed-point scales");
    __int128 s = (__int128)a.raw + b.raw;
    return FixedPoint{narrow_checked(s, "fixed-point addition overflow"), a.scale_bits};
}

FixedPoint fxp_sub(const FixedPoint& a, const FixedPoint& b) {
    check(a.scale_bits == b.scale_bits, Err::ShapeMismatch, "mixed fixed-point scales");
    __int128 s = (__int128)a.raw - b.raw;
    return FixedPoint{narrow_checked(s, "fixed-point subtraction overflow"), a.scale_bits};
}

FixedPoint fxp_mul(const FixedPoint& a, const FixedPoint& b) {
    check(a.scale_bits == b.scale_bits, Err::ShapeMismatch, "mixed fixed-point scales");
    __int128 prod = (__int128)a.raw * b.raw;
    __int128 q = floor_div(prod, (__int128)1 << a.scale_bits);
    return FixedPoint{narrow_checked(q, "fixed-point multiplication overflow"), a.scale_bits};
}

int64_t fxp_ln_raw(int64_t raw, int scale_bits) {
    check(raw > 0, Err::DomainError, "ln of non-positive fixed-point value");
    double v = std::log(std::ldexp((double)raw, -scale_bits));
    return (int64_t)std::llround(std::ldexp(v, scale_bits));
}

FixedPoint fxp_ln(const FixedPoint& x) {
    return FixedPoint{fxp_ln_raw(x.raw, x.scale_bits), x.scale_bits};
}

Fe fxp_to_fe(const FixedPoint& x) { return Fe::from_i128(x.raw); }

FixedPoint fxp_from_fe(const Fe& f, int scale_bits) {
    U256 c = f.canonical();
    if (c.w[1] == 0 && c.w[2] == 0 && c.w[3] == 0 && c.w[0] < (uint64_t(1) << 63)) {
        return FixedPoint{(int64_t)c.w[0], scale_bits};
    }
    __int128 v;
    try {
        v = f.to_i128();
    } catch (const Error&) {
        fail(Err::InvalidEncoding, "field element in unrepresentable middle band");
    }
    check(v < 0 && -v < kRangeHalf, Err::InvalidEncoding,
          "field element in unrepresentable middle band");
    return FixedPoint{(int64_t)v, scale_bits};
}

}  // namespace fiat
