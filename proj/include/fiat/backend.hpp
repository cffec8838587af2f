#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fiat/audit_circuit.hpp"
#include "fiat/r1cs.hpp"

namespace fiat {

struct ProofBlob {
    std::vector<uint8_t> bytes;  // framed: magic, backend id, BE length, payload
};

class ProofBackend {
public:
    virtual ~ProofBackend() = default;
    virtual uint8_t id() const = 0;
    virtual std::string name() const = 0;
    virtual ProofBlob prove(const ConstraintSystem& cs, const Witness& w,
                            const AuditStatement& statement) = 0;
    virtual bool verify(const ConstraintSystem& cs, uint64_t cs_digest,
                        const AuditStatement& statement, const ProofBlob& proof,
                        std::string* why = nullptr) = 0;
};

// Reference backend: the proof is the witness itself and verification is
// direct constraint satisfaction. Non-succinct and non-zero-knowledge; the
// protocol layer must redact it before anything crosses an actor boundary.
class DirectBackend : public ProofBackend {
public:
    static constexpr uint8_t kId = 1;
    uint8_t id() const override { return kId; }
    std::string name() const override { return "direct"; }
    ProofBlob prove(const ConstraintSystem& cs, const Witness& w,
                    const AuditStatement& statement) override;
    bool verify(const ConstraintSystem& cs, uint64_t cs_digest, const AuditStatement& statement,
                const ProofBlob& proof, std::string* why = nullptr) override;
};

std::unique_ptr<ProofBackend> make_backend(uint8_t id);

// Framing helpers ("FPRF" magic, backend id byte, big-endian u64 length).
std::vector<uint8_t> frame_proof(uint8_t backend_id, const std::vector<uint8_t>& payload);
std::pair<uint8_t, std::vector<uint8_t>> unframe_proof(const std::vector<uint8_t>& framed);

}  // namespace fiat
