#pragma once

#include <stdexcept>
#include <string>

namespace fiat {

enum class Err {
    RangeOverflow,
    InvalidEncoding,
    DomainError,
    ParseError,
    SchemaError,
    EmptyDataset,
    ShapeMismatch,
    DegenerateInput,
    InvalidPoint,
    Unauthorized,
    AlreadyCommitted,
    NotCommitted,
    UnsupportedAlgorithm,
    CommitmentMismatch,
    InvalidProof,
    InconsistentDecision,
    NoResult,
    DigestMismatch,
    HintFailure,
    UnsatisfiedWitness,
    MalformedProof,
    ShapeError,
    IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, Err code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace fiat
