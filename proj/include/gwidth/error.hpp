#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwidth {

enum class ErrorCode {
    ZeroVector,
    DimensionMismatch,
    NotUnimodular,
    NotPrimitive,
    Unbounded,
    Empty,
    NotDelzant,
    NotMonotone,
    AmbiguousMax,
    AmbiguousMin,
    NotEnoughComponents,
    HypothesisFailed,
    NotOrdered,
    EmptyProduct,
    InvalidRange,
    NotAVertex,
    InconsistentComponent,
    CrossCheckFailed,
    DegreeMismatch,
    InvalidInput,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotDelzant: return "NotDelzant";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::AmbiguousMax: return "AmbiguousMax";
    case ErrorCode::AmbiguousMin: return "AmbiguousMin";
    case ErrorCode::NotEnoughComponents: return "NotEnoughComponents";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::EmptyProduct: return "EmptyProduct";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::InconsistentComponent: return "InconsistentComponent";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

/**
 * Every failure raised by the library carries one of the codes above so the
 * command-line front end can map it onto an exit status.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// True for failures that mean "the manifold violates a hypothesis" rather
/// than "the input is malformed".
inline bool is_hypothesis_failure(ErrorCode code)
{
    return code == ErrorCode::HypothesisFailed || code == ErrorCode::NotMonotone;
}

} // namespace gwidth
