#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitcubic {

enum class ErrorCode {
    ZeroInverse,
    NotInvertible,
    MixedField,
    NotSquare,
    NotSymmetric,
    DimensionMismatch,
    InconsistentSystem,
    SingularCurve,
    FieldTooSmall,
    DegenerateLine,
    NotAnAutomorphism,
    ClosureBudgetExceeded,
    IllegalRank,
    FlexExtractionFailed,
    FormsNotEqual,
    MissingAutOrder,
    KernelRankUnexpected,
    NonIntegralKernel,
    SizeMismatch,
    NotPositiveDefinite,
    IndexNotInK,
    InvalidArgument,
    ParseError,
    VerificationFailed,
    Unsupported,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace splitcubic
