#ifndef LCDKIT_ERRORS_HPP
#define LCDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcdkit {

enum class Errc {
    // field construction / arithmetic
    NotPrime,
    ReducibleModulus,
    NoCanonicalModulus,
    UnsupportedFieldOrder,
    FieldMismatch,
    DivisionByZero,
    NotAQuadraticExtension,
    // matrices
    NotSquare,
    IndexOutOfRange,
    DimensionMismatch,
    // codes
    ZeroCode,
    HermitianNeedsSquareOrder,
    RankDeficient,
    ZeroScalarNotAllowed,
    RankDropped,
    BudgetExceeded,
    // constructions
    FieldTooSmall,
    SearchBudgetExceeded,
    AlreadyLCD,
    DecompositionViolated,
    // bounds
    OutOfDomain,
    // io / misc
    InvalidParameters,
    ParseError,
    VerifyFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NoCanonicalModulus: return "NoCanonicalModulus";
        case Errc::UnsupportedFieldOrder: return "UnsupportedFieldOrder";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotAQuadraticExtension: return "NotAQuadraticExtension";
        case Errc::NotSquare: return "NotSquare";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::HermitianNeedsSquareOrder: return "HermitianNeedsSquareOrder";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::ZeroScalarNotAllowed: return "ZeroScalarNotAllowed";
        case Errc::RankDropped: return "RankDropped";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::AlreadyLCD: return "AlreadyLCD";
        case Errc::DecompositionViolated: return "DecompositionViolated";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::InvalidParameters: return "InvalidParameters";
        case Errc::ParseError: return "ParseError";
        case Errc::VerifyFailed: return "VerifyFailed";
    }
    return "UnknownError";
}

}  // namespace lcdkit

#endif
