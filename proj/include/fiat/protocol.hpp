#pragma once

#include "fiat/contract.hpp"

namespace fiat {

// Outcome of the sender-side auditing run (Algorithm 1): the decision tuple
// plus the statement/proof pair the contract verifies. The witness never
// leaves this struct un-redacted; receivers only ever see `statement`.
struct AuditOutcome {
    bool pass = false;
    FixedPoint mi;
    Ciphertext y_enc;  // empty body on reject (the zero marker)
    AuditStatement statement;
    ProofBlob proof;
};

// Runs f on the non-sensitive part, estimates MI, compares against the
// contract threshold, encrypts on accept and proves the whole computation.
// CommitmentMismatch if the dataset no longer hashes to the committed value.
AuditOutcome sender_audit(const Dataset& d, const AuditContract& contract, const U256& esk,
                          ProofBackend& backend, uint32_t intervals = 10);

// Convenience wrapper: builds the circuit for the statement shape and runs
// backend verification; used as the contract's VerifierFn.
bool verify_statement_proof(const AuditStatement& statement, const ProofBlob& proof,
                            ProofBackend& backend, std::string* why);

// Decrypts the stored result and re-checks it against the proven digest and
// the key-confirmation sentinel. NoResult if the audit rejected or nothing
// was stored; DigestMismatch if the key does not open the ciphertext.
FxMatrix receiver_decode(const U256& sk, const AuditContract& contract);

}  // namespace fiat
