#pragma once

#include "fiat/field.hpp"

namespace fiat {

// MiMC-7 block encryption over BN254-Fr (91 rounds, x^7 round function).
Fe mimc_encrypt(const Fe& key, const Fe& x);

// Keystream PRF: prf(key, index) = Enc_key(index).
Fe mimc_prf(const Fe& key, const Fe& index);

}  // namespace fiat
