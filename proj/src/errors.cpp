#include "fock/errors.hpp"

namespace fock {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianState: return "NonHermitianState";
        case ErrorCode::ModeOutOfRange: return "ModeOutOfRange";
        case ErrorCode::ZeroTrace: return "ZeroTrace";
        case ErrorCode::NotFixedN: return "NotFixedN";
        case ErrorCode::EmptyState: return "EmptyState";
        case ErrorCode::BadSubsetSize: return "BadSubsetSize";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::UnbalancedIndex: return "UnbalancedIndex";
        case ErrorCode::ZeroIntensity: return "ZeroIntensity";
        case ErrorCode::DegenerateNormalization: return "DegenerateNormalization";
        case ErrorCode::BadEta: return "BadEta";
        case ErrorCode::NonUnitary: return "NonUnitary";
        case ErrorCode::TooManyPhotons: return "TooManyPhotons";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::EmptyTensor: return "EmptyTensor";
        case ErrorCode::DimensionCap: return "DimensionCap";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::WrongModeCount: return "WrongModeCount";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
    }
    return "UnknownError";
}

}  // namespace fock
