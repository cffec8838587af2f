#include "fiat/backend.hpp"

#include "fiat/errors.hpp"

namespace fiat {

namespace {
constexpr char kMagic[4] = {'F', 'P', 'R', 'F'};
}

std::vector<uint8_t> frame_proof(uint8_t backend_id, const std::vector<uint8_t>& payload) {
    std::vector<uint8_t> out;
    out.reserve(13 + payload.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(backend_id);
    uint64_t len = payload.size();
    for (int i = 7; i >= 0; --i) out.push_back((uint8_t)(len >> (8 * i)));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::pair<uint8_t, std::vector<uint8_t>> unframe_proof(const std::vector<uint8_t>& framed) {
    check(framed.size() >= 13, Err::MalformedProof, "proof too short for frame header");
    for (int i = 0; i < 4; ++i)
        check(framed[i] == (uint8_t)kMagic[i], Err::MalformedProof, "bad proof magic");
    uint8_t backend_id = framed[4];
    uint64_t len = 0;
    for (int i = 0; i < 8; ++i) len = (len << 8) | framed[5 + i];
    check(framed.size() == 13 + len, Err::MalformedProof, "proof length mismatch");
    return {backend_id, std::vector<uint8_t>(framed.begin() + 13, framed.end())};
}

ProofBlob DirectBackend::prove(const ConstraintSystem& cs, const Witness& w,
                               const AuditStatement& statement) {
    auto rep = is_satisfied(cs, w, statement.public_inputs());
    check(rep.ok, Err::UnsatisfiedWitness, "refusing to prove: " + rep.detail);
    return ProofBlob{frame_proof(kId, serialize_witness(w))};
}

bool DirectBackend::verify(const ConstraintSystem& cs, uint64_t cs_digest,
                           const AuditStatement& statement, const ProofBlob& proof,
                           std::string* why) {
    try {
        auto [backend_id, payload] = unframe_proof(proof.bytes);
        if (backend_id != kId) {
            if (why) *why = "proof was produced by a different backend";
            return false;
        }
        if (cs.digest() != cs_digest) {
            if (why) *why = "constraint system digest mismatch";
            return false;
        }
        Witness w = deserialize_witness(payload);
        auto rep = is_satisfied(cs, w, statement.public_inputs());
        if (!rep.ok && why) *why = rep.detail;
        return rep.ok;
    } catch (const Error& e) {
        if (why) *why = e.what();
        return false;
    }
}

std::unique_ptr<ProofBackend> make_backend(uint8_t id) {
    check(id == DirectBackend::kId, Err::UnsupportedAlgorithm,
          "unknown proof backend id " + std::to_string(id));
    return std::make_unique<DirectBackend>();
}

}  // namespace fiat
