#include "theta3/errors.hpp"

namespace theta3 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotHomologySphere: return "NotHomologySphere";
        case Errc::NonDivisibleBy8: return "NonDivisibleBy8";
        case Errc::SolveFailure: return "SolveFailure";
        case Errc::InvalidSeifertData: return "InvalidSeifertData";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InvalidSite: return "InvalidSite";
        case Errc::RoundingUnstable: return "RoundingUnstable";
        case Errc::NotEven: return "NotEven";
        case Errc::Definite: return "Definite";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::NotFourPeriodic: return "NotFourPeriodic";
        case Errc::NonIntegralNu: return "NonIntegralNu";
        case Errc::NonIntegralRank: return "NonIntegralRank";
        case Errc::ZeroSignature: return "ZeroSignature";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

}  // namespace theta3
