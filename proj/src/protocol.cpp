#include "fiat/protocol.hpp"

#include "fiat/errors.hpp"
#include "fiat/poseidon.hpp"

namespace fiat {

AuditOutcome sender_audit(const Dataset& d, const AuditContract& contract, const U256& esk,
                          ProofBackend& backend, uint32_t intervals) {
    check(contract.committed(), Err::NotCommitted, "commit the dataset first");
    check(contract.algo().has_value(), Err::NotCommitted, "no computation proposal registered");
    const Proposal& prop = *contract.algo();

    Fe hash = poseidon_hash(canonical_serialize(d));
    check(hash == contract.data_hash(), Err::CommitmentMismatch,
          "dataset no longer matches the committed hash");

    AuditProposal ap{prop.algo, prop.k, prop.pk};
    NativeAudit na = run_native_audit(d, ap, esk, contract.mi_threshold_raw(), intervals);

    AuditCircuit circuit = build_audit_circuit(na.shape);
    auto [witness, statement] = generate_witness(circuit, d, ap, esk,
                                                 contract.mi_threshold_raw());
    statement.backend_id = backend.id();

    AuditOutcome out;
    out.pass = statement.pass;
    out.mi = fxp_from_raw(statement.mi_raw);
    out.y_enc = statement.pass ? na.cipher : Ciphertext{};
    out.statement = statement;
    out.proof = backend.prove(circuit.cs, witness, statement);
    return out;
}

bool verify_statement_proof(const AuditStatement& statement, const ProofBlob& proof,
                            ProofBackend& backend, std::string* why) {
    try {
        AuditCircuit circuit = build_audit_circuit(statement.shape);
        return backend.verify(circuit.cs, circuit.cs.digest(), statement, proof, why);
    } catch (const Error& e) {
        if (why) *why = e.what();
        return false;
    }
}

FxMatrix receiver_decode(const U256& sk, const AuditContract& contract) {
    const Ciphertext& cipher = contract.result();  // NoResult when absent/rejected
    const AuditStatement& st = contract.recorded_statement();

    std::vector<Fe> digest_in{cipher.ephemeral_pk.x, cipher.ephemeral_pk.y};
    for (const Fe& v : cipher.body) digest_in.push_back(v);
    check(poseidon_hash(digest_in) == st.y_enc_digest, Err::DigestMismatch,
          "stored ciphertext does not match the proven digest");

    std::vector<Fe> plaintext = ecies_decrypt(sk, cipher);
    check(!plaintext.empty(), Err::MalformedProof, "empty plaintext");
    check(plaintext[0].is_zero(), Err::DigestMismatch,
          "key-confirmation sentinel mismatch: wrong secret key");

    const AuditShape& shape = st.shape;
    size_t expect = (size_t)shape.n_rows * shape.y_dims();
    check(plaintext.size() == expect + 1, Err::ShapeMismatch,
          "decrypted representation has unexpected size");
    FxMatrix y(shape.n_rows, shape.y_dims());
    for (size_t i = 0; i < expect; ++i)
        y.a[i] = fxp_from_fe(plaintext[i + 1]).raw;
    return y;
}

}  // namespace fiat
