#include "splitcubic/errors.hpp"

namespace splitcubic {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::IllegalRank: return "IllegalRank";
    case ErrorCode::FlexExtractionFailed: return "FlexExtractionFailed";
    case ErrorCode::FormsNotEqual: return "FormsNotEqual";
    case ErrorCode::MissingAutOrder: return "MissingAutOrder";
    case ErrorCode::KernelRankUnexpected: return "KernelRankUnexpected";
    case ErrorCode::NonIntegralKernel: return "NonIntegralKernel";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::IndexNotInK: return "IndexNotInK";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace splitcubic
