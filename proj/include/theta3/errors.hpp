#pragma once

#include <stdexcept>
#include <string>

namespace theta3 {

enum class Errc {
    NotHomologySphere,   // |det A| != 1 where a homology sphere is required
    NonDivisibleBy8,     // sign - w.w (or a Milnor-fiber signature) not divisible by 8
    SolveFailure,        // internal inconsistency: a guaranteed solve did not verify
    InvalidSeifertData,  // coprimality or positivity violated
    IndexOutOfRange,     // splice index outside [2, n-2] or fiber position invalid
    InvalidSite,         // blow-up site is not a vertex or edge of the graph
    RoundingUnstable,    // R-invariant residual exceeded the tolerance
    NotEven,             // even-form classification on a form with odd diagonal
    Definite,            // even-form classification needs an indefinite form
    NotUnimodular,       // |det| != 1 where the form classification requires it
    NotFourPeriodic,     // rank vector is not 4-periodic
    NonIntegralNu,       // nu is a half-integer where an integer is required
    NonIntegralRank,     // closed-form Floer rank did not evaluate to a nonneg integer
    ZeroSignature,       // 10/8 quotient undefined; inequality vacuous
    ParseError,          // malformed input text
    UnknownSuite,        // check suite name not recognized
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace theta3
