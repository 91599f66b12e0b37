// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colortiger {

enum class ErrorCode {
    ZeroVector,
    InvalidVector,
    ZeroChannel,
    NoValidPixels,
    EmptyInput,
    DegenerateInput,
    NegativeError,
    LengthMismatch,
    ParseError,
    MissingImage,
    InvalidGroundTruth,
    EmptyImage,
    AllPixelsInvalid,
    TooFewEntries,
    InvalidConfig,
    InvalidModel,
    Io,
};

/// Coarse grouping used by the command-line tool to pick an exit status.
enum class ErrorCategory { Usage, Data, Numerical };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    ErrorCode code_;
};

} // namespace colortiger
