#pragma once

#include <stdexcept>
#include <string>

namespace bierflag {

enum class ErrorKind {
    ParseError,
    UnknownVertex,
    EmptyInput,
    UnsupportedFormat,
    BadParams,
    OutOfRange,
    LengthMismatch,
    NotAFace,
    NotPure,
    NotFlag,
    NotS2,
    NotCM,
    VoidComplex,
    IsSimplex,
    NotSquarefree,
    MixedGenerators,
    NotBlueGenerators,
    NotPalindromic,
    EvenDimension,
    SweepTooLarge,
    CapExceeded,
    BudgetExceeded,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bierflag
