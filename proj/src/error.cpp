#include "edim/error.hpp"

namespace edim {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::FactorizationLimit: return "FACTORIZATION_LIMIT";
        case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
        case ErrorCode::IsotropicEntry: return "ISOTROPIC_ENTRY";
        case ErrorCode::LinearlyDependent: return "LINEARLY_DEPENDENT";
        case ErrorCode::SingularBasis: return "SINGULAR_BASIS";
        case ErrorCode::SearchLimit: return "SEARCH_LIMIT";
        case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
        case ErrorCode::ZeroDiagonalUnrepairable: return "ZERO_DIAGONAL_UNREPAIRABLE";
        case ErrorCode::TypeUndetermined: return "TYPE_UNDETERMINED";
        case ErrorCode::DiscNotTrivial: return "DISC_NOT_TRIVIAL";
        case ErrorCode::NotSymplectic: return "NOT_SYMPLECTIC";
        case ErrorCode::VarietyConstraintUnsatisfied: return "VARIETY_CONSTRAINT_UNSATISFIED";
        case ErrorCode::WitnessInvalid: return "WITNESS_INVALID";
        case ErrorCode::FirstEntryZero: return "FIRST_ENTRY_ZERO";
        case ErrorCode::CertificateFailed: return "CERTIFICATE_FAILED";
        case ErrorCode::InvalidInput: return "INVALID_INPUT";
        case ErrorCode::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace edim
