#ifndef EDIM_ERROR_HPP
#define EDIM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace edim {

enum class ErrorCode {
    FactorizationLimit,
    NotInvertible,
    IsotropicEntry,
    LinearlyDependent,
    SingularBasis,
    SearchLimit,
    DegenerateForm,
    ZeroDiagonalUnrepairable,
    TypeUndetermined,
    DiscNotTrivial,
    NotSymplectic,
    VarietyConstraintUnsatisfied,
    WitnessInvalid,
    FirstEntryZero,
    CertificateFailed,
    InvalidInput,
    ParseError,
};

// Canonical upper-case name, e.g. "FACTORIZATION_LIMIT".
std::string_view error_name(ErrorCode code);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace edim

#endif
