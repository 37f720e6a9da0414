#include "galois_moebius/errors.hpp"

namespace gm {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvariantCheckFailed: return "InvariantCheckFailed";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::EvenDegree: return "EvenDegree";
        case ErrorKind::EvenParameter: return "EvenParameter";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::DegreeHypothesisViolated: return "DegreeHypothesisViolated";
        case ErrorKind::NotInvolution: return "NotInvolution";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

}  // namespace gm
