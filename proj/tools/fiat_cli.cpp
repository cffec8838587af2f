// Command-line front end for the information-audit pipeline: the five
// protocol phases plus benchmarking and leakage reporting.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fiat/backend.hpp"
#include "fiat/errors.hpp"
#include "fiat/poseidon.hpp"
#include "fiat/protocol.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace fiat;

namespace {

int exit_code_for(Err e) {
    switch (e) {
        case Err::ParseError: return 2;
        case Err::AlreadyCommitted: return 3;
        case Err::InvalidProof: return 4;
        case Err::InconsistentDecision: return 5;
        case Err::NoResult: return 6;
        default: return 1;
    }
}

// Single-process guard against concurrent state mutation.
class StateLock {
public:
    explicit StateLock(const fs::path& dir) : path_(dir / ".lock") {
        std::error_code ec;
        fs::create_directories(dir, ec);
        std::ofstream probe(path_, std::ios::app);
        check(probe.good(), Err::IoError, "cannot touch lockfile " + path_.string());
        probe.close();
        // best-effort exclusivity: refuse when another holder marked itself
        std::ifstream in(path_);
        std::string content((std::istreambuf_iterator<char>(in)), {});
        check(content.empty(), Err::IoError, "state directory is locked by another process");
        std::ofstream out(path_, std::ios::trunc);
        out << "held";
        held_ = true;
    }
    ~StateLock() {
        if (held_) {
            std::ofstream out(path_, std::ios::trunc);
        }
    }

private:
    fs::path path_;
    bool held_ = false;
};

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    check(in.good(), Err::IoError, "cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    check(out.good(), Err::IoError, "cannot write " + p.string());
    out << content;
}

void write_bytes(const fs::path& p, const std::vector<uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    check(out.good(), Err::IoError, "cannot write " + p.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), (std::streamsize)bytes.size());
}

std::vector<uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    check(in.good(), Err::IoError, "cannot open " + p.string());
    std::vector<uint8_t> out((std::istreambuf_iterator<char>(in)), {});
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

// --- JSON codecs -----------------------------------------------------------

json shape_to_json(const AuditShape& s) {
    return json{{"n_rows", s.n_rows},      {"n_sens", s.n_sens},
                {"m_nonsens", s.m_nonsens}, {"k_dims", s.k_dims},
                {"intervals", s.intervals}, {"algo", (int)s.algo}};
}

AuditShape shape_from_json(const json& j) {
    AuditShape s;
    s.n_rows = j.at("n_rows");
    s.n_sens = j.at("n_sens");
    s.m_nonsens = j.at("m_nonsens");
    s.k_dims = j.at("k_dims");
    s.intervals = j.at("intervals");
    s.algo = (AlgoKind)(int)j.at("algo");
    return s;
}

json statement_to_json(const AuditStatement& st) {
    json j;
    j["data_hash"] = st.data_hash.to_decimal();
    j["threshold_raw"] = st.threshold_raw;
    j["pass"] = st.pass;
    j["mi_raw"] = st.mi_raw;
    j["y_enc_digest"] = st.y_enc_digest.to_decimal();
    j["pk"] = {st.pk.x.to_decimal(), st.pk.y.to_decimal()};
    j["shape"] = shape_to_json(st.shape);
    j["origin_x"] = st.origin_x;
    j["bw_x"] = st.bw_x;
    j["origin_y"] = st.origin_y;
    j["bw_y"] = st.bw_y;
    j["backend_id"] = st.backend_id;
    return j;
}

AuditStatement statement_from_json(const json& j) {
    AuditStatement st;
    st.data_hash = Fe::from_decimal(j.at("data_hash"));
    st.threshold_raw = j.at("threshold_raw");
    st.pass = j.at("pass");
    st.mi_raw = j.at("mi_raw");
    st.y_enc_digest = Fe::from_decimal(j.at("y_enc_digest"));
    st.pk.x = Fe::from_decimal(j.at("pk")[0]);
    st.pk.y = Fe::from_decimal(j.at("pk")[1]);
    st.shape = shape_from_json(j.at("shape"));
    st.origin_x = j.at("origin_x").get<std::vector<int64_t>>();
    st.bw_x = j.at("bw_x").get<std::vector<int64_t>>();
    st.origin_y = j.at("origin_y").get<std::vector<int64_t>>();
    st.bw_y = j.at("bw_y").get<std::vector<int64_t>>();
    st.backend_id = j.at("backend_id");
    return st;
}

json cipher_to_json(const Ciphertext& c) {
    json body = json::array();
    for (const Fe& v : c.body) body.push_back(v.to_decimal());
    return json{{"eph", {c.ephemeral_pk.x.to_decimal(), c.ephemeral_pk.y.to_decimal()}},
                {"body", body}};
}

Ciphertext cipher_from_json(const json& j) {
    Ciphertext c;
    c.ephemeral_pk.x = Fe::from_decimal(j.at("eph")[0]);
    c.ephemeral_pk.y = Fe::from_decimal(j.at("eph")[1]);
    for (const auto& v : j.at("body")) c.body.push_back(Fe::from_decimal(v));
    return c;
}

struct StateFile {
    AuditContract::Snapshot snap;
    uint32_t intervals = 10;
    std::string dataset_fingerprint;
};

json state_to_json(const StateFile& s) {
    json j;
    j["owner"] = s.snap.owner;
    j["consumer"] = s.snap.consumer;
    j["committed"] = s.snap.committed;
    if (s.snap.committed) j["data_hash"] = s.snap.data_hash.to_decimal();
    j["threshold_raw"] = s.snap.threshold_raw;
    j["audit_func"] = s.snap.audit_func;
    j["enc_func"] = s.snap.enc_func;
    j["intervals"] = s.intervals;
    if (s.snap.algo) {
        j["proposal"] = {{"algo", (int)s.snap.algo->algo},
                         {"k", s.snap.algo->k},
                         {"pk",
                          {s.snap.algo->pk.x.to_decimal(), s.snap.algo->pk.y.to_decimal()}}};
    }
    j["mi_total_raw"] = s.snap.mi_total_raw;
    j["result_kind"] = (int)s.snap.result_kind;
    if (s.snap.result_kind == ResultKind::Cipher) j["result"] = cipher_to_json(s.snap.result);
    if (s.snap.statement) j["statement"] = statement_to_json(*s.snap.statement);
    json log = json::array();
    for (const auto& e : s.snap.log)
        log.push_back(json{{"seq", e.seq},
                           {"caller", e.caller},
                           {"method", e.method},
                           {"args", e.args_digest},
                           {"outcome", e.outcome}});
    j["log"] = log;
    return j;
}

StateFile state_from_json(const json& j) {
    StateFile s;
    s.snap.owner = j.at("owner");
    s.snap.consumer = j.at("consumer");
    s.snap.committed = j.at("committed");
    if (s.snap.committed) s.snap.data_hash = Fe::from_decimal(j.at("data_hash"));
    s.snap.threshold_raw = j.at("threshold_raw");
    s.snap.audit_func = j.at("audit_func");
    s.snap.enc_func = j.at("enc_func");
    s.intervals = j.at("intervals");
    if (j.contains("proposal")) {
        Proposal p;
        p.algo = (AlgoKind)(int)j["proposal"].at("algo");
        p.k = j["proposal"].at("k");
        p.pk.x = Fe::from_decimal(j["proposal"].at("pk")[0]);
        p.pk.y = Fe::from_decimal(j["proposal"].at("pk")[1]);
        s.snap.algo = p;
    }
    s.snap.mi_total_raw = j.at("mi_total_raw");
    s.snap.result_kind = (ResultKind)(int)j.at("result_kind");
    if (s.snap.result_kind == ResultKind::Cipher) s.snap.result = cipher_from_json(j.at("result"));
    if (j.contains("statement")) s.snap.statement = statement_from_json(j.at("statement"));
    for (const auto& e : j.at("log"))
        s.snap.log.push_back(CallLogEntry{e.at("seq"), e.at("caller"), e.at("method"),
                                          e.at("args"), e.at("outcome")});
    return s;
}

StateFile load_state(const fs::path& dir) {
    return state_from_json(json::parse(read_text(dir / "contract.json")));
}

void store_state(const fs::path& dir, const StateFile& s) {
    write_text(dir / "contract.json", state_to_json(s).dump(2) + "\n");
    // the append-only call log also lands in a replayable text file
    std::ostringstream log;
    for (const auto& e : s.snap.log)
        log << e.seq << "\t" << e.caller << "\t" << e.method << "\t" << e.args_digest << "\t"
            << e.outcome << "\n";
    write_text(dir / "contract.log", log.str());
}

// --- shared command helpers -------------------------------------------------

struct CommonOpts {
    std::string out_dir = "fiat-state";
    uint8_t backend_id = DirectBackend::kId;
    uint64_t seed = 0;
    bool seeded = false;
};

std::mt19937_64 make_rng(const CommonOpts& c) {
    if (c.seeded) return std::mt19937_64(c.seed);
    std::random_device rd;
    return std::mt19937_64(((uint64_t)rd() << 32) ^ rd());
}

Dataset load_dataset(const std::string& data_path, const std::string& roles_path) {
    return ingest_csv(data_path, parse_role_config_file(roles_path));
}

JubPoint load_pubkey(const fs::path& p) {
    auto ls = lines_of(read_text(p));
    check(ls.size() >= 2, Err::ParseError, "public key file needs two decimal lines");
    return JubPoint{Fe::from_decimal(ls[0]), Fe::from_decimal(ls[1])};
}

int64_t committed_threshold(const Dataset& d, uint32_t intervals, double fixed,
                            bool has_fixed, double fraction) {
    if (has_fixed) return encode(fixed).raw;
    auto [xs, xns] = split(d);
    BinningSpec spec = BinningSpec::from_data(xs, (int)intervals);
    Marginal mx = build_histogram(xs, xs, spec, spec).x_marginal();
    FixedPoint h = entropy(mx);
    return fxp_mul(encode(fraction), h).raw;
}

std::string decode_threshold_note(int64_t raw) {
    std::ostringstream ss;
    ss.precision(6);
    ss << decode(fxp_from_raw(raw));
    return ss.str();
}

Dataset bench_dataset(uint32_t n_rows, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    FxMatrix xs(n_rows, 1), xns(n_rows, 2);
    for (uint32_t r = 0; r < n_rows; ++r) {
        double latent = g(rng);
        xs.at(r, 0) = encode(std::floor(latent * 2.0)).raw;
        xns.at(r, 0) = encode(latent + 0.5 * g(rng)).raw;
        xns.at(r, 1) = encode(0.7 * latent + 0.8 * g(rng)).raw;
    }
    return dataset_from_matrices(xs, xns);
}

void run_bench(const std::vector<uint32_t>& sizes, uint32_t intervals, uint64_t seed) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    };
    std::cout << "N\ttotal\thash\tpca\tmi\tenc\tglue\tbuild_ms\twitness_ms\tcheck_ms\n";
    std::vector<int64_t> totals;
    for (uint32_t n : sizes) {
        std::mt19937_64 rng(seed + n);
        Dataset d = bench_dataset(n, seed);
        KeyPair kp = jub_keygen(rng);
        AuditProposal prop{AlgoKind::Pca, 1, kp.pk};
        AuditShape shape{n, 1, 2, 1, intervals, AlgoKind::Pca};

        auto t0 = clock::now();
        AuditCircuit circuit = build_audit_circuit(shape);
        auto build_ms = ms_since(t0);

        t0 = clock::now();
        auto [w, st] = generate_witness(circuit, d, prop, jub_random_scalar(rng),
                                        encode(5.0).raw);
        auto witness_ms = ms_since(t0);

        t0 = clock::now();
        auto rep = is_satisfied(circuit.cs, w, st.public_inputs());
        auto check_ms = ms_since(t0);
        check(rep.ok, Err::UnsatisfiedWitness, "bench witness failed: " + rep.detail);

        uint64_t by_tag[5] = {0, 0, 0, 0, 0};
        for (Tag t : circuit.cs.tags) by_tag[(int)t]++;
        uint64_t total = circuit.cs.constraints.size();
        totals.push_back((int64_t)total);
        std::cout << n << "\t" << total << "\t" << by_tag[(int)Tag::Hash] << "\t"
                  << by_tag[(int)Tag::Pca] << "\t" << by_tag[(int)Tag::Mi] << "\t"
                  << by_tag[(int)Tag::Enc] << "\t" << by_tag[(int)Tag::Glue] << "\t"
                  << build_ms << "\t" << witness_ms << "\t" << check_ms << "\n";
    }
    if (sizes.size() >= 2) {
        bool affine = true;
        for (size_t i = 2; i < totals.size(); ++i)
            affine &= (totals[i] - totals[i - 1]) == (totals[i - 1] - totals[i - 2]);
        double per_row =
            (double)(totals.back() - totals.front()) / (sizes.back() - sizes.front());
        std::cout << "# affine: " << (affine ? "yes" : "NO")
                  << ", per-row constraints: " << per_row << "\n";
    }
}

void run_mi_report(const Dataset& d, std::vector<uint32_t> dims, uint32_t intervals,
                   double fraction) {
    auto [xs, xns] = split(d);
    uint32_t m = (uint32_t)xns.cols;
    if (dims.empty())
        for (uint32_t k = 1; k < std::max(2u, m); ++k) dims.push_back(k);
    for (uint32_t k : dims)
        check(k >= 1 && k <= m, Err::ShapeError, "requested dims outside 1..m");
    uint32_t kmax = *std::max_element(dims.begin(), dims.end());
    FixedPca pca = fit_pca_fixed(xns, kmax);

    std::vector<std::string> feature_names;
    for (const auto& col : d.schema.columns)
        if (col.role == ColRole::Sensitive) feature_names.push_back(col.name);

    std::cout << "dims\tfeature\tmi_nats\tentropy_nats\tratio\tflag\n";
    auto emit = [&](const std::string& dims_label, size_t feature, const FxMatrix& y) {
        FxMatrix xcol(xs.rows, 1);
        for (size_t r = 0; r < xs.rows; ++r) xcol.at(r, 0) = xs.at(r, feature);
        MIResult res = audit_mi(xcol, y, BinningSpec::from_data(xcol, (int)intervals),
                                BinningSpec::from_data(y, (int)intervals));
        bool below = decode(res.ratio) < fraction;
        std::cout << dims_label << "\t" << feature_names[feature] << "\t"
                  << decode(res.mi_nats) << "\t" << decode(res.entropy_x_nats) << "\t"
                  << decode(res.ratio) << "\t" << (below ? "below" : "-") << "\n";
    };
    for (uint32_t k : dims) {
        FixedPca prefix = pca;
        prefix.k = k;
        prefix.eigval_raw.resize(k);
        prefix.eigvec_raw.resize(k);
        FxMatrix y = prefix.project(xns);
        for (size_t f = 0; f < feature_names.size(); ++f) emit(std::to_string(k), f, y);
    }
    for (size_t f = 0; f < feature_names.size(); ++f) emit("raw", f, xns);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fiat: fine-grained information audit pipeline"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--out", common.out_dir, "state/artifact directory")->capture_default_str();
    app.add_option("--backend", common.backend_id, "proof backend id")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", common.seed, "fix all randomness");

    std::string data_path, roles_path, pubkey_path, sk_path, algo_name = "pca";
    std::string sizes_csv = "100,200,300,400,500", dims_csv;
    std::string owner = "owner", consumer = "consumer", caller;
    uint32_t k = 3, intervals = 10;
    double threshold_value = 0.0, entropy_fraction = 0.4;

    auto* keygen = app.add_subcommand("keygen", "generate a receiver key pair");
    std::string out_sk = "sk.txt", out_pk = "pk.txt";
    keygen->add_option("--sk", out_sk, "secret key output file")->capture_default_str();
    keygen->add_option("--pk", out_pk, "public key output file")->capture_default_str();

    auto* commit = app.add_subcommand("commit", "committing phase: hash the dataset");
    commit->add_option("--data", data_path, "dataset csv")->required();
    commit->add_option("--roles", roles_path, "column role config")->required();
    auto* thr_opt = commit->add_option("--threshold", threshold_value,
                                       "fixed MI threshold in nats");
    commit->add_option("--entropy-fraction", entropy_fraction,
                       "threshold as a fraction of the sensitive entropy")
        ->capture_default_str();
    commit->add_option("--intervals", intervals, "binning intervals per dimension")
        ->capture_default_str();
    commit->add_option("--owner", owner)->capture_default_str();
    commit->add_option("--consumer", consumer)->capture_default_str();

    auto* propose = app.add_subcommand("propose", "computation proposing phase");
    propose->add_option("--algo", algo_name, "pca|raw")->capture_default_str();
    propose->add_option("--k", k, "representation dimensions for pca")->capture_default_str();
    propose->add_option("--pubkey", pubkey_path, "receiver public key file")->required();
    propose->add_option("--caller", caller, "caller id (defaults to the consumer)");

    auto* audit = app.add_subcommand("audit", "auditing phase: run Algorithm 1");
    audit->add_option("--data", data_path, "dataset csv")->required();
    audit->add_option("--roles", roles_path, "column role config")->required();

    auto* verify = app.add_subcommand("verify", "verifying phase: contract checks the proof");
    verify->add_option("--caller", caller, "caller id (defaults to the owner)");

    auto* decode_cmd = app.add_subcommand("decode", "decoding phase: receiver decrypts Y");
    decode_cmd->add_option("--sk", sk_path, "receiver secret key file")->required();

    auto* bench = app.add_subcommand("bench", "constraint/time scaling table");
    bench->add_option("--sizes", sizes_csv, "comma-separated row counts")
        ->capture_default_str();
    bench->add_option("--intervals", intervals, "binning intervals")->capture_default_str();

    auto* mi_report = app.add_subcommand("mi-report", "per-feature leakage table");
    mi_report->add_option("--data", data_path, "dataset csv")->required();
    mi_report->add_option("--roles", roles_path, "column role config")->required();
    mi_report->add_option("--dims", dims_csv, "comma-separated PCA dims (default 1..m-1)");
    mi_report->add_option("--intervals", intervals, "binning intervals")
        ->capture_default_str();
    mi_report->add_option("--entropy-fraction", entropy_fraction, "flagging threshold")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    common.seeded = seed_opt->count() > 0;
    fs::path dir(common.out_dir);

    try {
        Fe::check_modulus_prime();

        if (*keygen) {
            auto rng = make_rng(common);
            KeyPair kp = jub_keygen(rng);
            write_text(out_sk, kp.sk.to_decimal() + "\n");
            write_text(out_pk, kp.pk.x.to_decimal() + "\n" + kp.pk.y.to_decimal() + "\n");
            std::cout << "wrote " << out_sk << " and " << out_pk << "\n";
            return 0;
        }

        if (*commit) {
            StateLock lock(dir);
            Dataset d = load_dataset(data_path, roles_path);
            Fe digest = poseidon_hash(canonical_serialize(d));
            int64_t threshold = committed_threshold(d, intervals, threshold_value,
                                                    thr_opt->count() > 0, entropy_fraction);
            StateFile state;
            if (fs::exists(dir / "contract.json")) {
                state = load_state(dir);
            } else {
                state.snap.owner = owner;
                state.snap.consumer = consumer;
            }
            state.intervals = intervals;
            AuditContract contract = AuditContract::restore(state.snap);
            try {
                contract.get_data(state.snap.owner, digest, threshold, "kde-mi-v1",
                                  "ecies-mimc-v1");
            } catch (...) {
                state.snap = contract.snapshot();
                store_state(dir, state);
                throw;
            }
            state.snap = contract.snapshot();
            store_state(dir, state);
            write_text(dir / "commitment.txt", digest.to_decimal() + "\n");
            std::cout << "committed digest " << digest.to_decimal() << "\n"
                      << "threshold_raw " << threshold << " ("
                      << decode_threshold_note(threshold) << " nats)\n";
            return 0;
        }

        if (*propose) {
            StateLock lock(dir);
            StateFile state = load_state(dir);
            Proposal p;
            if (algo_name == "pca") {
                p.algo = AlgoKind::Pca;
                p.k = k;
            } else if (algo_name == "raw") {
                p.algo = AlgoKind::RawData;
            } else {
                fail(Err::UnsupportedAlgorithm, "algo must be pca or raw");
            }
            p.pk = load_pubkey(pubkey_path);
            AuditContract contract = AuditContract::restore(state.snap);
            std::string who = caller.empty() ? state.snap.consumer : caller;
            try {
                contract.get_proposal(who, p, 64);
            } catch (...) {
                state.snap = contract.snapshot();
                store_state(dir, state);
                throw;
            }
            state.snap = contract.snapshot();
            store_state(dir, state);
            std::cout << "proposal registered: " << algo_name;
            if (p.algo == AlgoKind::Pca) std::cout << "(k=" << p.k << ")";
            std::cout << "\n";
            return 0;
        }

        if (*audit) {
            StateLock lock(dir);
            StateFile state = load_state(dir);
            Dataset d = load_dataset(data_path, roles_path);
            AuditContract contract = AuditContract::restore(state.snap);
            auto rng = make_rng(common);
            U256 esk = jub_random_scalar(rng);
            auto backend = make_backend(common.backend_id);
            AuditOutcome outcome = sender_audit(d, contract, esk, *backend, state.intervals);

            write_text(dir / "statement.json",
                       statement_to_json(outcome.statement).dump(2) + "\n");
            write_bytes(dir / "proof.bin", outcome.proof.bytes);
            std::ostringstream ct;
            ct << outcome.y_enc.ephemeral_pk.x.to_decimal() << "\n"
               << outcome.y_enc.ephemeral_pk.y.to_decimal() << "\n";
            for (const Fe& v : outcome.y_enc.body) ct << v.to_decimal() << "\n";
            write_text(dir / "ciphertext.txt", ct.str());
            std::cout << (outcome.pass ? "accept" : "reject") << "\tMI "
                      << decode(outcome.mi) << " nats\tthreshold "
                      << decode(fxp_from_raw(contract.mi_threshold_raw())) << " nats\n";
            return 0;
        }

        if (*verify) {
            StateLock lock(dir);
            StateFile state = load_state(dir);
            AuditStatement st = statement_from_json(json::parse(read_text(dir / "statement.json")));
            ProofBlob proof{read_bytes(dir / "proof.bin")};
            auto ct_lines = lines_of(read_text(dir / "ciphertext.txt"));
            Ciphertext y_enc;
            if (st.pass) {
                check(ct_lines.size() >= 2, Err::ParseError, "ciphertext file too short");
                y_enc.ephemeral_pk.x = Fe::from_decimal(ct_lines[0]);
                y_enc.ephemeral_pk.y = Fe::from_decimal(ct_lines[1]);
                for (size_t i = 2; i < ct_lines.size(); ++i)
                    y_enc.body.push_back(Fe::from_decimal(ct_lines[i]));
            }
            auto backend = make_backend(st.backend_id);
            AuditContract contract = AuditContract::restore(state.snap);
            std::string who = caller.empty() ? state.snap.owner : caller;
            try {
                contract.verify_and_update(
                    who, st, y_enc, proof,
                    [&](const AuditStatement& s, const ProofBlob& p, std::string* why) {
                        return verify_statement_proof(s, p, *backend, why);
                    });
            } catch (...) {
                state.snap = contract.snapshot();
                store_state(dir, state);
                throw;
            }
            state.snap = contract.snapshot();
            store_state(dir, state);
            std::cout << "verified: " << (st.pass ? "accept" : "reject") << " recorded, MI_total "
                      << decode(fxp_from_raw(contract.mi_total_raw())) << " nats\n";
            return 0;
        }

        if (*decode_cmd) {
            StateFile state = load_state(dir);
            AuditContract contract = AuditContract::restore(state.snap);
            auto sk_lines = lines_of(read_text(sk_path));
            check(!sk_lines.empty(), Err::ParseError, "secret key file is empty");
            U256 sk = U256::from_decimal(sk_lines[0]);
            FxMatrix y = receiver_decode(sk, contract);
            std::ostringstream out;
            out.precision(17);
            for (size_t r = 0; r < y.rows; ++r) {
                for (size_t c = 0; c < y.cols; ++c) {
                    if (c) out << ",";
                    out << std::defaultfloat << decode(fxp_from_raw(y.at(r, c)));
                }
                out << "\n";
            }
            write_text(dir / "y.csv", out.str());
            std::cout << "decoded " << y.rows << "x" << y.cols << " representation to "
                      << (dir / "y.csv").string() << "\n";
            return 0;
        }

        if (*bench) {
            std::vector<uint32_t> sizes;
            for (const auto& tok : lines_of([&] {
                     std::string s = sizes_csv;
                     for (auto& ch : s)
                         if (ch == ',') ch = '\n';
                     return s;
                 }()))
                sizes.push_back((uint32_t)std::stoul(tok));
            check(!sizes.empty(), Err::ParseError, "no sizes given");
            for (size_t i = 1; i < sizes.size(); ++i)
                check(sizes[i] > sizes[i - 1], Err::ParseError, "sizes must be ascending");
            run_bench(sizes, intervals, common.seeded ? common.seed : 424242);
            return 0;
        }

        if (*mi_report) {
            Dataset d = load_dataset(data_path, roles_path);
            std::vector<uint32_t> dims;
            if (!dims_csv.empty()) {
                std::string s = dims_csv;
                for (auto& ch : s)
                    if (ch == ',') ch = '\n';
                for (const auto& tok : lines_of(s)) dims.push_back((uint32_t)std::stoul(tok));
            }
            run_mi_report(d, dims, intervals, entropy_fraction);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
