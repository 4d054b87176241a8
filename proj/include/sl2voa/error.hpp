#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2voa {

enum class Errc {
    BothZero,
    NotCoprime,
    POutOfRange,
    QOutOfRange,
    ZOutOfRange,
    WeightOutOfRange,
    ParamOutOfRange,
    InternalNonAdmissibleOutput,
    NonAdmissibleEigenvalue,
    AlgebraMismatch,
    NotProportional,
    DegreeNotConcentrated,
    InsufficientDepth,
    NotMonomial,
    WrongExponent,
    ZeroDivisor,
    EmptyDenominator,
    NonConvergent,
    TolTooSmall,
    DenominatorNearZero,
    ParseError,
};

constexpr std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::BothZero: return "BothZero";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::POutOfRange: return "POutOfRange";
    case Errc::QOutOfRange: return "QOutOfRange";
    case Errc::ZOutOfRange: return "ZOutOfRange";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::InternalNonAdmissibleOutput: return "InternalNonAdmissibleOutput";
    case Errc::NonAdmissibleEigenvalue: return "NonAdmissibleEigenvalue";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotProportional: return "NotProportional";
    case Errc::DegreeNotConcentrated: return "DegreeNotConcentrated";
    case Errc::InsufficientDepth: return "InsufficientDepth";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::WrongExponent: return "WrongExponent";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::EmptyDenominator: return "EmptyDenominator";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::TolTooSmall: return "TolTooSmall";
    case Errc::DenominatorNearZero: return "DenominatorNearZero";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace sl2voa
