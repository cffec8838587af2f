#include "fiat/contract.hpp"

#include "fiat/errors.hpp"
#include "fiat/poseidon.hpp"

namespace fiat {

namespace {

std::string short_digest(const std::vector<Fe>& items) {
    return poseidon_hash(items).to_decimal().substr(0, 16);
}

}  // namespace

void AuditContract::append_log(const std::string& caller, const std::string& method,
                               const std::string& args, const std::string& outcome) {
    log_.push_back(CallLogEntry{seq_++, caller, method, args, outcome});
}

const Fe& AuditContract::data_hash() const {
    check(data_hash_.has_value(), Err::NotCommitted, "no dataset committed");
    return *data_hash_;
}

const Ciphertext& AuditContract::result() const {
    check(result_kind_ == ResultKind::Cipher, Err::NoResult,
          result_kind_ == ResultKind::ZeroMarker ? "audit was rejected"
                                                 : "no verified audit result");
    return result_;
}

const AuditStatement& AuditContract::recorded_statement() const {
    check(recorded_statement_.has_value(), Err::NoResult, "no verified audit result");
    return *recorded_statement_;
}

AuditContract::Snapshot AuditContract::snapshot() const {
    Snapshot s;
    s.owner = owner_;
    s.consumer = consumer_;
    s.committed = data_hash_.has_value();
    if (s.committed) s.data_hash = *data_hash_;
    s.threshold_raw = threshold_raw_;
    s.audit_func = audit_func_;
    s.enc_func = enc_func_;
    s.algo = algo_;
    s.mi_total_raw = mi_total_raw_;
    s.result_kind = result_kind_;
    s.result = result_;
    s.statement = recorded_statement_;
    s.log = log_;
    return s;
}

AuditContract AuditContract::restore(const Snapshot& s) {
    AuditContract c(s.owner, s.consumer);
    if (s.committed) c.data_hash_ = s.data_hash;
    c.threshold_raw_ = s.threshold_raw;
    c.audit_func_ = s.audit_func;
    c.enc_func_ = s.enc_func;
    c.algo_ = s.algo;
    c.mi_total_raw_ = s.mi_total_raw;
    c.result_kind_ = s.result_kind;
    c.result_ = s.result;
    c.recorded_statement_ = s.statement;
    c.log_ = s.log;
    c.seq_ = s.log.empty() ? 0 : s.log.back().seq + 1;
    return c;
}

void AuditContract::get_data(const std::string& caller, const Fe& hash, int64_t threshold_raw,
                             const std::string& audit_func, const std::string& enc_func) {
    auto log_fail = [&](Err e, const std::string& what) {
        append_log(caller, "GetData", hash.to_decimal().substr(0, 16), err_name(e));
        fail(e, what);
    };
    if (caller != owner_) log_fail(Err::Unauthorized, "GetData requires the owner");
    if (data_hash_.has_value()) log_fail(Err::AlreadyCommitted, "DataHash already set");
    data_hash_ = hash;
    threshold_raw_ = threshold_raw;
    audit_func_ = audit_func;
    enc_func_ = enc_func;
    append_log(caller, "GetData", hash.to_decimal().substr(0, 16), "ok");
}

void AuditContract::get_proposal(const std::string& caller, const Proposal& proposal,
                                 uint32_t max_dims) {
    std::string args = short_digest({proposal.pk.x, proposal.pk.y,
                                     Fe::from_u64((uint64_t)proposal.algo),
                                     Fe::from_u64(proposal.k)});
    auto log_fail = [&](Err e, const std::string& what) {
        append_log(caller, "GetProposal", args, err_name(e));
        fail(e, what);
    };
    if (caller != consumer_) log_fail(Err::Unauthorized, "GetProposal requires the consumer");
    if (!data_hash_.has_value()) log_fail(Err::NotCommitted, "no dataset committed yet");
    if (proposal.algo == AlgoKind::Pca && (proposal.k < 1 || proposal.k > max_dims))
        log_fail(Err::UnsupportedAlgorithm, "pca dimension out of supported range");
    if (!jub_in_subgroup(proposal.pk))
        log_fail(Err::InvalidPoint, "public key not in the prime-order subgroup");
    algo_ = proposal;
    append_log(caller, "GetProposal", args, "ok");
}

void AuditContract::verify_and_update(const std::string& caller,
                                      const AuditStatement& statement, const Ciphertext& y_enc,
                                      const ProofBlob& proof, const VerifierFn& verify) {
    std::string args = short_digest({statement.data_hash, statement.y_enc_digest,
                                     Fe::from_i128(statement.mi_raw),
                                     Fe::from_u64(statement.pass ? 1 : 0)});
    auto log_fail = [&](Err e, const std::string& what) {
        append_log(caller, "VerifyAndUpdate", args, err_name(e));
        fail(e, what);
    };
    if (caller != owner_) log_fail(Err::Unauthorized, "VerifyAndUpdate requires the owner");
    if (!data_hash_.has_value()) log_fail(Err::NotCommitted, "no dataset committed");
    if (!algo_.has_value()) log_fail(Err::NotCommitted, "no proposal registered");
    if (!(statement.data_hash == *data_hash_))
        log_fail(Err::CommitmentMismatch, "statement hash differs from the committed one");
    if (statement.threshold_raw != threshold_raw_)
        log_fail(Err::InconsistentDecision, "statement threshold differs from the committed one");

    // Algorithm guard: decision flag must match the MI/threshold comparison.
    bool accept_ok = statement.pass && statement.mi_raw <= threshold_raw_;
    bool reject_ok = !statement.pass && statement.mi_raw > threshold_raw_;
    if (!accept_ok && !reject_ok)
        log_fail(Err::InconsistentDecision, "pass flag contradicts MI vs threshold");

    std::string why;
    if (!verify(statement, proof, &why)) log_fail(Err::InvalidProof, "proof rejected: " + why);

    if (statement.pass) {
        // Bind the stored ciphertext to the proven digest.
        std::vector<Fe> digest_in{y_enc.ephemeral_pk.x, y_enc.ephemeral_pk.y};
        for (const Fe& v : y_enc.body) digest_in.push_back(v);
        if (!(poseidon_hash(digest_in) == statement.y_enc_digest))
            log_fail(Err::InvalidProof, "ciphertext does not match the proven digest");
        result_ = y_enc;
        result_kind_ = ResultKind::Cipher;
    } else {
        result_ = Ciphertext{};
        result_kind_ = ResultKind::ZeroMarker;
    }
    mi_total_raw_ = statement.mi_raw;
    recorded_statement_ = statement;
    append_log(caller, "VerifyAndUpdate", args, "ok");
}

}  // namespace fiat
