#include "fiat/field.hpp"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "fiat/errors.hpp"

namespace fiat {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

// BN254 scalar field modulus, little-endian limbs.
// 0x30644e72e131a029 b85045b68181585d 2833e84879b97091 43e1f593f0000001
constexpr std::array<u64, 4> kP = {0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                   0xb85045b68181585dULL, 0x30644e72e131a029ULL};

constexpr const char* kPDecimal =
    "21888242871839275222246405745257275088548364400416034343698204186575808495617";

bool geq_p(const std::array<u64, 4>& a) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] != kP[i]) return a[i] > kP[i];
    }
    return true;
}

void sub_p(std::array<u64, 4>& a) {
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = (u128)a[i] - kP[i] - borrow;
        a[i] = (u64)d;
        borrow = (d >> 64) & 1;
    }
}

struct MontCtx {
    u64 n0inv;                 // -p^{-1} mod 2^64
    std::array<u64, 4> r;      // 2^256 mod p (Montgomery one)
    std::array<u64, 4> r2;     // 2^512 mod p

    MontCtx() {
        // Newton iteration for p[0]^{-1} mod 2^64.
        u64 inv = 1;
        for (int i = 0; i < 6; ++i) inv *= 2 - kP[0] * inv;
        n0inv = ~inv + 1;

        // 2^256 mod p and 2^512 mod p via modular doubling.
        std::array<u64, 4> acc = {1, 0, 0, 0};
        auto dbl = [&]() {
            u64 carry = 0;
            for (int i = 0; i < 4; ++i) {
                u64 hi = acc[i] >> 63;
                acc[i] = (acc[i] << 1) | carry;
                carry = hi;
            }
            if (carry || geq_p(acc)) sub_p(acc);
        };
        for (int i = 0; i < 256; ++i) dbl();
        r = acc;
        for (int i = 0; i < 256; ++i) dbl();
        r2 = acc;
    }
};

const MontCtx& ctx() {
    static const MontCtx c;
    return c;
}

// CIOS Montgomery multiplication: out = a * b * 2^-256 mod p.
void mont_mul(const std::array<u64, 4>& a, const std::array<u64, 4>& b,
              std::array<u64, 4>& out) {
    const u64 n0 = ctx().n0inv;
    u64 t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        u128 c = 0;
        for (int j = 0; j < 4; ++j) {
            u128 s = (u128)t[j] + (u128)a[i] * b[j] + c;
            t[j] = (u64)s;
            c = s >> 64;
        }
        u128 s = (u128)t[4] + c;
        t[4] = (u64)s;
        t[5] = (u64)(s >> 64);

        u64 m = t[0] * n0;
        c = ((u128)t[0] + (u128)m * kP[0]) >> 64;
        for (int j = 1; j < 4; ++j) {
            s = (u128)t[j] + (u128)m * kP[j] + c;
            t[j - 1] = (u64)s;
            c = s >> 64;
        }
        s = (u128)t[4] + c;
        t[3] = (u64)s;
        t[4] = t[5] + (u64)(s >> 64);
        t[5] = 0;
    }
    std::array<u64, 4> res = {t[0], t[1], t[2], t[3]};
    if (t[4] || geq_p(res)) sub_p(res);
    out = res;
}

}  // namespace

U256 U256::from_decimal(const std::string& s) {
    check(!s.empty(), Err::ParseError, "empty integer literal");
    U256 acc;
    for (char ch : s) {
        check(ch >= '0' && ch <= '9', Err::ParseError, "bad digit in integer literal");
        u128 carry = (u128)(ch - '0');
        for (int i = 0; i < 4; ++i) {
            u128 v = (u128)acc.w[i] * 10 + carry;
            acc.w[i] = (u64)v;
            carry = v >> 64;
        }
        check(carry == 0, Err::ParseError, "integer literal exceeds 256 bits");
    }
    return acc;
}

std::string U256::to_decimal() const {
    U256 tmp = *this;
    if (tmp.is_zero()) return "0";
    std::string out;
    while (!tmp.is_zero()) {
        u128 rem = 0;
        for (int i = 3; i >= 0; --i) {
            u128 cur = (rem << 64) | tmp.w[i];
            tmp.w[i] = (u64)(cur / 10);
            rem = cur % 10;
        }
        out.push_back(static_cast<char>('0' + (int)rem));
    }
    return std::string(out.rbegin(), out.rend());
}

Fe Fe::one() {
    Fe f;
    f.v_ = ctx().r;
    return f;
}

Fe Fe::from_u64(uint64_t x) {
    Fe f;
    std::array<u64, 4> raw = {x, 0, 0, 0};
    mont_mul(raw, ctx().r2, f.v_);
    return f;
}

Fe Fe::from_canonical(const U256& x) {
    check(x < modulus(), Err::RangeOverflow, "canonical value not below modulus");
    Fe f;
    mont_mul(x.w, ctx().r2, f.v_);
    return f;
}

Fe Fe::from_i128(__int128 x) {
    bool negative = x < 0;
    u128 mag = negative ? (u128)(-(x + 1)) + 1 : (u128)x;
    std::array<u64, 4> raw = {(u64)mag, (u64)(mag >> 64), 0, 0};
    Fe f;
    mont_mul(raw, ctx().r2, f.v_);
    return negative ? f.neg() : f;
}

Fe Fe::from_decimal(const std::string& s) { return from_canonical(U256::from_decimal(s)); }

U256 Fe::canonical() const {
    std::array<u64, 4> one_raw = {1, 0, 0, 0};
    U256 out;
    mont_mul(v_, one_raw, out.w);
    return out;
}

__int128 Fe::to_i128() const {
    U256 c = canonical();
    if (c.w[2] == 0 && c.w[3] == 0 && (c.w[1] >> 62) == 0) {
        return (__int128)(((u128)c.w[1] << 64) | c.w[0]);
    }
    // Try the negative band: p - c must be small.
    U256 p = modulus();
    u128 borrow = 0;
    std::array<u64, 4> d;
    for (int i = 0; i < 4; ++i) {
        u128 s = (u128)p.w[i] - c.w[i] - borrow;
        d[i] = (u64)s;
        borrow = (s >> 64) & 1;
    }
    check(d[2] == 0 && d[3] == 0 && (d[1] >> 62) == 0, Err::RangeOverflow,
          "field element outside signed 126-bit band");
    return -(__int128)(((u128)d[1] << 64) | d[0]);
}

Fe Fe::operator+(const Fe& o) const {
    Fe out;
    u128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        u128 s = (u128)v_[i] + o.v_[i] + carry;
        out.v_[i] = (u64)s;
        carry = s >> 64;
    }
    if (carry || geq_p(out.v_)) sub_p(out.v_);
    return out;
}

Fe Fe::operator-(const Fe& o) const {
    Fe out;
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = (u128)v_[i] - o.v_[i] - borrow;
        out.v_[i] = (u64)d;
        borrow = (d >> 64) & 1;
    }
    if (borrow) {
        u128 carry = 0;
        for (int i = 0; i < 4; ++i) {
            u128 s = (u128)out.v_[i] + kP[i] + carry;
            out.v_[i] = (u64)s;
            carry = s >> 64;
        }
    }
    return out;
}

Fe Fe::operator*(const Fe& o) const {
    Fe out;
    mont_mul(v_, o.v_, out.v_);
    return out;
}

Fe Fe::neg() const { return Fe() - *this; }

bool Fe::is_zero() const { return v_[0] == 0 && v_[1] == 0 && v_[2] == 0 && v_[3] == 0; }

Fe Fe::pow(const U256& e) const {
    Fe acc = Fe::one();
    bool seen = false;
    for (int i = 255; i >= 0; --i) {
        if (seen) acc = acc * acc;
        if (e.bit(i)) {
            acc = acc * *this;
            seen = true;
        }
    }
    return acc;
}

Fe Fe::inv() const {
    U256 e = modulus();
    // p - 2
    u128 borrow = 2;
    for (int i = 0; i < 4 && borrow; ++i) {
        u128 d = (u128)e.w[i] - borrow;
        e.w[i] = (u64)d;
        borrow = (d >> 64) & 1;
    }
    return pow(e);
}

const U256& Fe::modulus() {
    static const U256 p{{kP[0], kP[1], kP[2], kP[3]}};
    return p;
}

const std::string& Fe::modulus_decimal() {
    static const std::string s = kPDecimal;
    return s;
}

void Fe::check_modulus_prime() {
    static const bool ok = [] {
        namespace mp = boost::multiprecision;
        mp::cpp_int p(kPDecimal);
        std::mt19937_64 rng(0xF1A7F1E1DULL);
        return mp::miller_rabin_test(p, 40, rng);
    }();
    check(ok, Err::DomainError, "field modulus failed primality test");
}

}  // namespace fiat
