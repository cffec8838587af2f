#include "fiat/errors.hpp"

namespace fiat {

const char* err_name(Err e) {
    switch (e) {
        case Err::RangeOverflow: return "RangeOverflow";
        case Err::InvalidEncoding: return "InvalidEncoding";
        case Err::DomainError: return "DomainError";
        case Err::ParseError: return "ParseError";
        case Err::SchemaError: return "SchemaError";
        case Err::EmptyDataset: return "EmptyDataset";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::DegenerateInput: return "DegenerateInput";
        case Err::InvalidPoint: return "InvalidPoint";
        case Err::Unauthorized: return "Unauthorized";
        case Err::AlreadyCommitted: return "AlreadyCommitted";
        case Err::NotCommitted: return "NotCommitted";
        case Err::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
        case Err::CommitmentMismatch: return "CommitmentMismatch";
        case Err::InvalidProof: return "InvalidProof";
        case Err::InconsistentDecision: return "InconsistentDecision";
        case Err::NoResult: return "NoResult";
        case Err::DigestMismatch: return "DigestMismatch";
        case Err::HintFailure: return "HintFailure";
        case Err::UnsatisfiedWitness: return "UnsatisfiedWitness";
        case Err::MalformedProof: return "MalformedProof";
        case Err::ShapeError: return "ShapeError";
        case Err::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace fiat
