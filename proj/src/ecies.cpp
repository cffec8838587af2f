#include "fiat/ecies.hpp"

#include "fiat/errors.hpp"
#include "fiat/mimc.hpp"

namespace fiat {

Ciphertext ecies_encrypt(const JubPoint& pk, const std::vector<Fe>& plaintext,
                         const U256& ephemeral_sk) {
    check(!plaintext.empty(), Err::EmptyDataset, "empty plaintext");
    Fe shared = ecdh(ephemeral_sk, pk);
    Ciphertext c;
    c.ephemeral_pk = jub_mul(ephemeral_sk, jub_generator());
    c.body.reserve(plaintext.size());
    for (size_t i = 0; i < plaintext.size(); ++i)
        c.body.push_back(plaintext[i] + mimc_prf(shared, Fe::from_u64(i)));
    return c;
}

std::vector<Fe> ecies_decrypt(const U256& sk, const Ciphertext& c) {
    Fe shared = ecdh(sk, c.ephemeral_pk);
    std::vector<Fe> out;
    out.reserve(c.body.size());
    for (size_t i = 0; i < c.body.size(); ++i)
        out.push_back(c.body[i] - mimc_prf(shared, Fe::from_u64(i)));
    return out;
}

}  // namespace fiat
