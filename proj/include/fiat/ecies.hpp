#pragma once

#include <vector>

#include "fiat/babyjubjub.hpp"
#include "fiat/field.hpp"

namespace fiat {

struct Ciphertext {
    JubPoint ephemeral_pk;
    std::vector<Fe> body;

    bool operator==(const Ciphertext& o) const {
        return ephemeral_pk == o.ephemeral_pk && body == o.body;
    }
};

// ECDH + MiMC keystream: body[i] = plaintext[i] + prf(shared.x, i).
Ciphertext ecies_encrypt(const JubPoint& pk, const std::vector<Fe>& plaintext,
                         const U256& ephemeral_sk);
std::vector<Fe> ecies_decrypt(const U256& sk, const Ciphertext& c);

}  // namespace fiat
