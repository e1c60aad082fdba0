// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftmcfe {

/// Machine-readable failure codes. The CLI prints the kebab-case name as a
/// single line on stderr; library callers switch on the enum.
enum class ErrorCode {
    UnsupportedCurve,
    EmptyInput,
    MalformedEncoding,
    WrongSubgroup,
    DegreeExceedsSrs,
    NotAMember,
    QuorumTooSmall,
    MismatchedLabel,
    MismatchedThreshold,
    ComponentMismatch,
    DlogNotFound,
    IndexOutOfRange,
    ThresholdOutOfRange,
    PlaintextOutOfRange,
    IoError,
    VersionMismatch,
    CorruptKey,
    CodecOverflow,
    ConfigParseError,
    UsageError,
};

inline constexpr std::string_view error_code_name(ErrorCode c) noexcept
{
    switch (c) {
    case ErrorCode::UnsupportedCurve: return "unsupported-curve";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::MalformedEncoding: return "malformed-encoding";
    case ErrorCode::WrongSubgroup: return "wrong-subgroup";
    case ErrorCode::DegreeExceedsSrs: return "degree-exceeds-srs";
    case ErrorCode::NotAMember: return "not-a-member";
    case ErrorCode::QuorumTooSmall: return "quorum-too-small";
    case ErrorCode::MismatchedLabel: return "mismatched-label";
    case ErrorCode::MismatchedThreshold: return "mismatched-threshold";
    case ErrorCode::ComponentMismatch: return "component-mismatch";
    case ErrorCode::DlogNotFound: return "dlog-not-found";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::ThresholdOutOfRange: return "threshold-out-of-range";
    case ErrorCode::PlaintextOutOfRange: return "plaintext-out-of-range";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::VersionMismatch: return "version-mismatch";
    case ErrorCode::CorruptKey: return "corrupt-key";
    case ErrorCode::CodecOverflow: return "codec-overflow";
    case ErrorCode::ConfigParseError: return "config-parse-error";
    case ErrorCode::UsageError: return "usage-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code)
    {
    }

    explicit Error(ErrorCode code) : std::runtime_error(std::string(error_code_name(code))), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

}  // namespace ftmcfe
