#include "bierflag/error.hpp"

namespace bierflag {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::NotFlag: return "NotFlag";
        case ErrorKind::NotS2: return "NotS2";
        case ErrorKind::NotCM: return "NotCM";
        case ErrorKind::VoidComplex: return "VoidComplex";
        case ErrorKind::IsSimplex: return "IsSimplex";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::MixedGenerators: return "MixedGenerators";
        case ErrorKind::NotBlueGenerators: return "NotBlueGenerators";
        case ErrorKind::NotPalindromic: return "NotPalindromic";
        case ErrorKind::EvenDimension: return "EvenDimension";
        case ErrorKind::SweepTooLarge: return "SweepTooLarge";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Error";
}

}  // namespace bierflag
