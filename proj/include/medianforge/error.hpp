#ifndef MEDIANFORGE_ERROR_HPP
#define MEDIANFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace medianforge {

enum class Errc {
    ParseError,
    NotSimple,
    Disconnected,
    UnknownVertex,
    EmptyInput,
    EqualVertices,
    BudgetExceeded,
    GraphMismatch,
    NotMember,
    TrivialInput,
    NotAntichain,
    Inconsistent,
    Incomplete,
    InvalidOrientation,
    PocsetMismatch,
    NotMedianGraph,
    NotHalfSpace,
    NotConvex,
    NotDisjoint,
    PairwiseEmpty,
    RoundtripFailure,
    NestednessViolation,
    InvariantViolation,
    BadParams,
    RadiusOrder,
    NoRay,
    MapDomain,
    InvalidPocset,
    IoError,
};

inline constexpr std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::ParseError: return "ParseError";
        case Errc::NotSimple: return "NotSimple";
        case Errc::Disconnected: return "Disconnected";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::EqualVertices: return "EqualVertices";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::GraphMismatch: return "GraphMismatch";
        case Errc::NotMember: return "NotMember";
        case Errc::TrivialInput: return "TrivialInput";
        case Errc::NotAntichain: return "NotAntichain";
        case Errc::Inconsistent: return "Inconsistent";
        case Errc::Incomplete: return "Incomplete";
        case Errc::InvalidOrientation: return "InvalidOrientation";
        case Errc::PocsetMismatch: return "PocsetMismatch";
        case Errc::NotMedianGraph: return "NotMedianGraph";
        case Errc::NotHalfSpace: return "NotHalfSpace";
        case Errc::NotConvex: return "NotConvex";
        case Errc::NotDisjoint: return "NotDisjoint";
        case Errc::PairwiseEmpty: return "PairwiseEmpty";
        case Errc::RoundtripFailure: return "RoundtripFailure";
        case Errc::NestednessViolation: return "NestednessViolation";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::BadParams: return "BadParams";
        case Errc::RadiusOrder: return "RadiusOrder";
        case Errc::NoRay: return "NoRay";
        case Errc::MapDomain: return "MapDomain";
        case Errc::InvalidPocset: return "InvalidPocset";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

/// Internal-invariant failures signal a bug in this library, not bad input.
inline constexpr bool is_internal(Errc code) {
    return code == Errc::RoundtripFailure || code == Errc::NestednessViolation ||
           code == Errc::InvariantViolation;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    Errc code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
    if (!condition) fail(code, what);
}

} // namespace medianforge

#endif
