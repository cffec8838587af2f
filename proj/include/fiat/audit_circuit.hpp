#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fiat/babyjubjub.hpp"
#include "fiat/dataset.hpp"
#include "fiat/ecies.hpp"
#include "fiat/estimator.hpp"
#include "fiat/gadgets.hpp"
#include "fiat/pca.hpp"
#include "fiat/r1cs.hpp"

namespace fiat {

enum class AlgoKind : uint8_t { RawData = 0, Pca = 1 };

struct AuditShape {
    uint32_t n_rows = 0;
    uint32_t n_sens = 0;
    uint32_t m_nonsens = 0;
    uint32_t k_dims = 0;  // requested output dims; ignored for RawData
    uint32_t intervals = 10;
    AlgoKind algo = AlgoKind::Pca;

    uint32_t y_dims() const { return algo == AlgoKind::RawData ? m_nonsens : k_dims; }
    uint64_t grid_x() const;
    uint64_t grid_y() const;
    void validate() const;
    bool operator==(const AuditShape& o) const = default;
};

// Public inputs of the audit circuit, in this order: data_hash, threshold,
// pass, mi, y_enc_digest, pk.x, pk.y, algo id, k, intervals, then the binning
// origins and bandwidths for both sides.
struct AuditStatement {
    Fe data_hash;
    int64_t threshold_raw = 0;
    bool pass = false;  // accept
    int64_t mi_raw = 0;
    Fe y_enc_digest;
    JubPoint pk;
    AuditShape shape;
    std::vector<int64_t> origin_x, bw_x, origin_y, bw_y;
    uint8_t backend_id = 1;

    std::vector<Fe> public_inputs() const;
    size_t num_public() const { return 10 + 2 * origin_x.size() + 2 * origin_y.size(); }
};

struct AuditProposal {
    AlgoKind algo = AlgoKind::Pca;
    uint32_t k = 3;
    JubPoint pk;
};

// Everything the native pipeline produces for one audit run; the witness
// generator and the protocol layer both consume it.
struct NativeAudit {
    AuditShape shape;
    FxMatrix xs, xns, y;
    Fe data_hash;
    BinningSpec spec_x, spec_y;
    std::optional<FixedPca> pca;
    MIResult mi;
    int64_t threshold_raw = 0;
    bool pass = false;
    U256 esk;
    JubPoint eph;
    Fe shared;
    Ciphertext cipher;       // sentinel-prefixed encryption of y (accept path)
    std::vector<Fe> body;    // digest preimage payload (zeros on reject)
    Fe y_digest;
    AuditStatement statement;
};

NativeAudit run_native_audit(const Dataset& d, const AuditProposal& proposal, const U256& esk,
                             int64_t threshold_raw, uint32_t intervals = 10);

struct AuditCircuit {
    AuditShape shape;
    ConstraintSystem cs;
    std::vector<Var> data_vars;          // serialization order
    size_t eigen_constraint_count = 0;   // size of the eigenpair-check block
};

AuditCircuit build_audit_circuit(const AuditShape& shape);

// Runs the native pipeline, regenerates the circuit with values, and checks
// it reproduced the given structure. HintFailure if a native hint violates an
// in-circuit tolerance.
std::pair<Witness, AuditStatement> generate_witness(const AuditCircuit& circuit,
                                                    const Dataset& d,
                                                    const AuditProposal& proposal,
                                                    const U256& esk, int64_t threshold_raw);

// Standalone gadgets with spec-level contracts (also used by the builder).

// Residual and orthonormality checks for eigenpair hints against a fixed-point
// covariance (scale 2^20). tol_scaled is the residual bound at scale 2^40.
void g_eigenpair_check(R1csBuilder& b, const std::vector<std::vector<LinComb>>& cov,
                       const std::vector<std::vector<Var>>& vecs, const std::vector<Var>& vals,
                       const LinComb& tol_scaled);

// Bins one value: idx = clamp(floor((x - origin)/bw), 0, intervals-1), with
// origin/bw as circuit inputs. Returns the clamped index variable.
Var g_bin_index(R1csBuilder& b, const LinComb& x, const LinComb& origin, const LinComb& bw,
                uint32_t intervals);

// The MI estimator over already-binned one-hot cell indicators: emits
// counting, ratio-division and ln-check constraints and returns the variable
// holding the fixed-point mutual information.
struct MiGadgetInput {
    std::vector<std::vector<LinComb>> x_rows;  // N x n (values, scale 2^20)
    std::vector<std::vector<LinComb>> y_rows;  // N x yd
    std::vector<LinComb> origin_x, bw_x, origin_y, bw_y;
    uint32_t intervals = 10;
};
Var g_mi(R1csBuilder& b, const MiGadgetInput& in);

}  // namespace fiat
