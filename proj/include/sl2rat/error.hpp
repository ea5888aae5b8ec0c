#pragma once

#include <stdexcept>
#include <string>

namespace sl2rat {

/// Every failure the library reports is one of these kinds. The CLI maps
/// them to exit code 1 and prints the kind name verbatim.
enum class ErrorKind {
    Syntax,
    ZeroDenominator,
    ZeroPolynomial,
    DegreeMismatch,
    DimensionMismatch,
    Singular,
    InconsistentSystem,
    NotARepresentation,
    SingularOperator,
    NonConstantMinpoly,
    LevelOutsideBaseField,
    NotInvariant,
    NotCasimir,
    PiMuIrreducible,
    InvalidExtensionData,
    LevelMismatch,
    CyclicVectorNotFound,
    IrrationalConstant,
    InvalidInput,
    Internal,
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::InconsistentSystem: return "InconsistentSystem";
        case ErrorKind::NotARepresentation: return "NotARepresentation";
        case ErrorKind::SingularOperator: return "SingularOperator";
        case ErrorKind::NonConstantMinpoly: return "NonConstantMinpoly";
        case ErrorKind::LevelOutsideBaseField: return "LevelOutsideBaseField";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotCasimir: return "NotCasimir";
        case ErrorKind::PiMuIrreducible: return "PiMuIrreducible";
        case ErrorKind::InvalidExtensionData: return "InvalidExtensionData";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::CyclicVectorNotFound: return "CyclicVectorNotFound";
        case ErrorKind::IrrationalConstant: return "IrrationalConstant";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace sl2rat
