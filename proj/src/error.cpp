#include "chordprop/error.hpp"

namespace chordprop {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateHalfEdge: return "DuplicateHalfEdge";
        case ErrorCode::FixedPointInPairing: return "FixedPointInPairing";
        case ErrorCode::MissingHalfEdge: return "MissingHalfEdge";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::LoopContraction: return "LoopContraction";
        case ErrorCode::PointContraction: return "PointContraction";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::GhostNotCircles: return "GhostNotCircles";
        case ErrorCode::RoleCountMismatch: return "RoleCountMismatch";
        case ErrorCode::NonpositiveLength: return "NonpositiveLength";
        case ErrorCode::MarkingOutOfRange: return "MarkingOutOfRange";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::UnreducedInput: return "UnreducedInput";
        case ErrorCode::CoincidentAttachment: return "CoincidentAttachment";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::BadSphereDim: return "BadSphereDim";
        case ErrorCode::QMustBePositive: return "QMustBePositive";
        case ErrorCode::NonHomogeneous: return "NonHomogeneous";
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::NoUnit: return "NoUnit";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace chordprop
