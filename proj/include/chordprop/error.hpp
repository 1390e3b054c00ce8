#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordprop {

enum class ErrorCode {
    // fat graph construction
    DuplicateHalfEdge,
    FixedPointInPairing,
    MissingHalfEdge,
    DisconnectedGraph,
    LoopContraction,
    PointContraction,
    BoundExceeded,
    // chord diagrams
    GhostNotCircles,
    RoleCountMismatch,
    NonpositiveLength,
    MarkingOutOfRange,
    TypeMismatch,
    UnreducedInput,
    CoincidentAttachment,
    // sign calculus
    AmbientMismatch,
    BadSphereDim,
    QMustBePositive,
    // graded algebras
    NonHomogeneous,
    DegreeViolation,
    NoUnit,
    // parser
    SyntaxError,
    // I/O and usage (CLI)
    IoError,
    UsageError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. `code()` is the machine-readable identity of the
/// failure; what() additionally carries a human-readable detail string.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a source position (1-based line/column).
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& detail, int line, int column)
        : Error(code, detail + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace chordprop
