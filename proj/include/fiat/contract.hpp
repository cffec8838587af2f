#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fiat/audit_circuit.hpp"
#include "fiat/backend.hpp"
#include "fiat/ecies.hpp"

namespace fiat {

struct Proposal {
    AlgoKind algo = AlgoKind::Pca;
    uint32_t k = 3;
    JubPoint pk;
};

struct CallLogEntry {
    uint64_t seq = 0;
    std::string caller;
    std::string method;
    std::string args_digest;
    std::string outcome;  // "ok" or the error name
};

enum class ResultKind : uint8_t { Unset = 0, Cipher = 1, ZeroMarker = 2 };

// In-process simulation of the auditing contract: a deterministic
// single-writer state machine with an append-only call log.
class AuditContract {
public:
    AuditContract(std::string owner, std::string consumer)
        : owner_(std::move(owner)), consumer_(std::move(consumer)) {}

    // GetData: owner commits the dataset hash, threshold and function ids.
    void get_data(const std::string& caller, const Fe& data_hash, int64_t threshold_raw,
                  const std::string& audit_func, const std::string& enc_func);

    // GetProposal: consumer registers the representation algorithm and key.
    void get_proposal(const std::string& caller, const Proposal& proposal, uint32_t max_dims);

    // VerifyAndUpdate: owner submits (pass, MI, Y_enc, proof); the proof is
    // checked by `verify` and the decision against the stored threshold.
    using VerifierFn = std::function<bool(const AuditStatement&, const ProofBlob&, std::string*)>;
    void verify_and_update(const std::string& caller, const AuditStatement& statement,
                           const Ciphertext& y_enc, const ProofBlob& proof,
                           const VerifierFn& verify);

    const std::string& owner() const { return owner_; }
    const std::string& consumer() const { return consumer_; }
    bool committed() const { return data_hash_.has_value(); }
    const Fe& data_hash() const;
    int64_t mi_threshold_raw() const { return threshold_raw_; }
    const std::string& audit_func() const { return audit_func_; }
    const std::string& enc_func() const { return enc_func_; }
    const std::optional<Proposal>& algo() const { return algo_; }
    int64_t mi_total_raw() const { return mi_total_raw_; }
    ResultKind result_kind() const { return result_kind_; }
    const Ciphertext& result() const;
    const AuditStatement& recorded_statement() const;
    const std::vector<CallLogEntry>& log() const { return log_; }

    // Whole-state snapshot for persistence (the CLI's contract.json).
    struct Snapshot {
        std::string owner, consumer;
        bool committed = false;
        Fe data_hash;
        int64_t threshold_raw = 0;
        std::string audit_func, enc_func;
        std::optional<Proposal> algo;
        int64_t mi_total_raw = 0;
        ResultKind result_kind = ResultKind::Unset;
        Ciphertext result;
        std::optional<AuditStatement> statement;
        std::vector<CallLogEntry> log;
    };
    Snapshot snapshot() const;
    static AuditContract restore(const Snapshot& s);

private:
    void append_log(const std::string& caller, const std::string& method,
                    const std::string& args, const std::string& outcome);

    std::string owner_, consumer_;
    std::optional<Fe> data_hash_;
    int64_t threshold_raw_ = 0;
    std::string audit_func_, enc_func_;
    std::optional<Proposal> algo_;
    int64_t mi_total_raw_ = 0;
    ResultKind result_kind_ = ResultKind::Unset;
    Ciphertext result_;
    std::optional<AuditStatement> recorded_statement_;
    std::vector<CallLogEntry> log_;
    uint64_t seq_ = 0;
};

}  // namespace fiat
