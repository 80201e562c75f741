#pragma once

#include <stdexcept>
#include <string>

namespace cf {

// Every failure raised by the library carries one of these codes. The CLI maps
// codes to exit statuses, the HTTP layer maps them to 4xx responses.
enum class Errc {
    InvalidVertex,
    NotSkewSymmetric,
    InvalidQuiver,
    EmptySubset,
    Disconnected,
    UnknownArrow,
    VertexOnTwoCycle,
    PrecisionExhausted,
    DegenerateQuadraticPart,
    TwoCycleInOutput,
    InexactDivision,
    NotHomogeneous,
    SignCoherenceViolation,
    Overflow,
    SingularBasis,
    ExcludedSurface,
    InvalidArc,
    DifferentSurface,
    ArcNotInTriangulation,
    InvalidTriangulation,
    NotExceptional,
    SearchExhausted,
    ParseError,
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

}  // namespace cf
