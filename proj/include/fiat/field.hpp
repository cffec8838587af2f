#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace fiat {

// 256-bit unsigned integer, little-endian limbs. Canonical (non-Montgomery)
// representation used at the serialization boundary.
struct U256 {
    std::array<uint64_t, 4> w{0, 0, 0, 0};

    bool operator==(const U256& o) const { return w == o.w; }
    bool operator<(const U256& o) const {
        for (int i = 3; i >= 0; --i) {
            if (w[i] != o.w[i]) return w[i] < o.w[i];
        }
        return false;
    }
    bool is_zero() const { return w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0; }
    bool bit(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    static U256 from_u64(uint64_t x) { return U256{{x, 0, 0, 0}}; }
    static U256 from_decimal(const std::string& s);
    std::string to_decimal() const;
};

// Element of the BN254 scalar field, kept in Montgomery form.
class Fe {
public:
    Fe() : v_{0, 0, 0, 0} {}

    static Fe zero() { return Fe(); }
    static Fe one();
    static Fe from_u64(uint64_t x);
    static Fe from_i128(__int128 x);  // negatives embed as p - |x|
    static Fe from_canonical(const U256& x);  // x must be < p
    static Fe from_decimal(const std::string& s);

    U256 canonical() const;
    std::string to_decimal() const { return canonical().to_decimal(); }
    // Signed interpretation for values known to lie in (-2^126, 2^126).
    __int128 to_i128() const;

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe& operator+=(const Fe& o) { return *this = *this + o; }
    Fe& operator-=(const Fe& o) { return *this = *this - o; }
    Fe& operator*=(const Fe& o) { return *this = *this * o; }
    Fe neg() const;
    Fe pow(const U256& e) const;
    Fe inv() const;  // multiplicative inverse; zero maps to zero

    bool is_zero() const;
    bool operator==(const Fe& o) const { return v_ == o.v_; }
    bool operator!=(const Fe& o) const { return !(v_ == o.v_); }

    // Total order on canonical values (for maps in tests/serialization).
    bool less_canonical(const Fe& o) const { return canonical() < o.canonical(); }

    static const U256& modulus();
    static const std::string& modulus_decimal();
    // One-time probabilistic primality self-check of the modulus.
    static void check_modulus_prime();

private:
    std::array<uint64_t, 4> v_;
    friend struct FeHash;
};

struct FeHash {
    size_t operator()(const Fe& x) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (uint64_t limb : x.v_) {
            h ^= limb;
            h *= 0x100000001b3ULL;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace fiat
