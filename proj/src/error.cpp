#include "ckc/error.hpp"

namespace ckc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DegenerateFeature: return "DegenerateFeature";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::ZeroNorm: return "ZeroNorm";
        case ErrorCode::FeatureCountMismatch: return "FeatureCountMismatch";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NodeCountMismatch: return "NodeCountMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::GraphTooLarge: return "GraphTooLarge";
        case ErrorCode::CyclicGraph: return "CyclicGraph";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
        case ErrorCode::TooFewEmbeddedSamples: return "TooFewEmbeddedSamples";
        case ErrorCode::TooFewYears: return "TooFewYears";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::TooFewSubgroups: return "TooFewSubgroups";
        case ErrorCode::AllSubgroupsTooSmall: return "AllSubgroupsTooSmall";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::TooFewRows: return "TooFewRows";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace ckc
