#pragma once

#include <random>

#include "fiat/field.hpp"

namespace fiat {

// Baby Jubjub: the twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over
// BN254-Fr (EIP-2494), with the prime-order-subgroup generator as base point.
struct JubPoint {
    Fe x, y;

    bool operator==(const JubPoint& o) const { return x == o.x && y == o.y; }
    bool is_identity() const { return x.is_zero() && y == Fe::one(); }
    static JubPoint identity() { return JubPoint{Fe::zero(), Fe::one()}; }
};

const Fe& jub_a();
const Fe& jub_d();
const JubPoint& jub_generator();
// Order of the prime-order subgroup.
const U256& jub_subgroup_order();

bool jub_on_curve(const JubPoint& p);
bool jub_in_subgroup(const JubPoint& p);

JubPoint jub_add(const JubPoint& a, const JubPoint& b);
JubPoint jub_mul(const U256& scalar, const JubPoint& p);

struct KeyPair {
    U256 sk;
    JubPoint pk;
};

// Uniform nonzero scalar below the subgroup order (rejection sampling).
U256 jub_random_scalar(std::mt19937_64& rng);
KeyPair jub_keygen(std::mt19937_64& rng);

// Shared secret: x-coordinate of sk * pk. InvalidPoint unless pk is a valid
// subgroup point.
Fe ecdh(const U256& sk, const JubPoint& pk);

}  // namespace fiat
