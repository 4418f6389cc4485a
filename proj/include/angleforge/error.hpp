#pragma once

#include <stdexcept>
#include <string>

namespace angleforge {

/// Failure categories surfaced to callers and to the CLI exit-code mapping.
enum class ErrorKind {
    Input,                   // malformed job, unknown names, schema errors
    CyclicQuiver,
    UnknownArrow,
    DimensionMismatch,
    ResolutionTooLong,
    InfiniteGlobalDimension,
    NotNullHomotopic,
    NonAdmissiblePhi,
    ZeroMissing,
    NotInAddU,
    NotInFamily,
    DecompositionRequired,
    MissingTower,
    HypothesisFailed,
    CompletionFailed,
    RankDeficient,
    CertificateFailed,
    Unsupported,
    Internal,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Input: return "InputError";
        case ErrorKind::CyclicQuiver: return "CyclicQuiver";
        case ErrorKind::UnknownArrow: return "UnknownArrow";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ResolutionTooLong: return "ResolutionTooLong";
        case ErrorKind::InfiniteGlobalDimension: return "InfiniteGlobalDimension";
        case ErrorKind::NotNullHomotopic: return "NotNullHomotopic";
        case ErrorKind::NonAdmissiblePhi: return "NonAdmissiblePhi";
        case ErrorKind::ZeroMissing: return "ZeroMissing";
        case ErrorKind::NotInAddU: return "NotInAddU";
        case ErrorKind::NotInFamily: return "NotInFamily";
        case ErrorKind::DecompositionRequired: return "DecompositionRequired";
        case ErrorKind::MissingTower: return "MissingTower";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::CompletionFailed: return "CompletionFailed";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Internal consistency check; a failure means a bug, not bad input.
inline void ensure(bool cond, const char* what) {
    if (!cond) throw Error(ErrorKind::Internal, what);
}

}  // namespace angleforge
