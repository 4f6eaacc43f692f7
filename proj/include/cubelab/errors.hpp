#pragma once

#include <stdexcept>
#include <string>

namespace cubelab {

// Error codes surfaced by graph construction, multipole composition and the
// property checkers. One exception type carries the code so callers (and the
// CLI) can branch without string matching.
enum class Err {
    NotCubic,
    NotSimple,
    Disconnected,
    OddOrder,
    BadVertexId,
    UnknownSemiedge,
    MultiEdge,
    Loop,
    OrderTooLarge,
    NoPerfectMatching,
    NotAMatching,
    PreconditionViolated,
    LemmaViolation,
    ParseError,
    UnknownName,
    NotABijection,
    OddT,
    InternalCheckFailed,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NotCubic: return "NotCubic";
        case Err::NotSimple: return "NotSimple";
        case Err::Disconnected: return "Disconnected";
        case Err::OddOrder: return "OddOrder";
        case Err::BadVertexId: return "BadVertexId";
        case Err::UnknownSemiedge: return "UnknownSemiedge";
        case Err::MultiEdge: return "MultiEdge";
        case Err::Loop: return "Loop";
        case Err::OrderTooLarge: return "OrderTooLarge";
        case Err::NoPerfectMatching: return "NoPerfectMatching";
        case Err::NotAMatching: return "NotAMatching";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::LemmaViolation: return "LemmaViolation";
        case Err::ParseError: return "ParseError";
        case Err::UnknownName: return "UnknownName";
        case Err::NotABijection: return "NotABijection";
        case Err::OddT: return "OddT";
        case Err::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Unknown";
}

class GraphError : public std::runtime_error {
public:
    GraphError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace cubelab
