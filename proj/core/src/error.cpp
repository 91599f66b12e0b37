// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "colortiger/error.hpp"

namespace colortiger {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidVector: return "InvalidVector";
    case ErrorCode::ZeroChannel: return "ZeroChannel";
    case ErrorCode::NoValidPixels: return "NoValidPixels";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NegativeError: return "NegativeError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::InvalidGroundTruth: return "InvalidGroundTruth";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::AllPixelsInvalid: return "AllPixelsInvalid";
    case ErrorCode::TooFewEntries: return "TooFewEntries";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidConfig:
        return ErrorCategory::Usage;
    case ErrorCode::ZeroVector:
    case ErrorCode::InvalidVector:
    case ErrorCode::ZeroChannel:
    case ErrorCode::DegenerateInput:
    case ErrorCode::NegativeError:
        return ErrorCategory::Numerical;
    default:
        return ErrorCategory::Data;
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

} // namespace colortiger
