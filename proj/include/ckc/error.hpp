#pragma once

#include <stdexcept>
#include <string>

namespace ckc {

enum class ErrorCode {
    DimensionTooSmall,
    DimensionMismatch,
    IndexOutOfRange,
    DegenerateFeature,
    OutOfDomain,
    ZeroNorm,
    FeatureCountMismatch,
    BadK,
    EmptyInput,
    NodeCountMismatch,
    ShapeMismatch,
    GraphTooLarge,
    CyclicGraph,
    LengthMismatch,
    ZeroDenominator,
    WindowOutOfRange,
    TooFewEmbeddedSamples,
    TooFewYears,
    ZeroVariance,
    TooFewSubgroups,
    AllSubgroupsTooSmall,
    ParseError,
    TooFewRows,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace ckc
