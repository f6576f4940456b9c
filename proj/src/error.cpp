#include "braidual/error.hpp"

namespace braidual {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NoAntipode: return "NoAntipode";
    case ErrorKind::PrecheckFailed: return "PrecheckFailed";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Validation: return "ValidationFailed";
    case ErrorKind::Limit: return "DimensionLimit";
    case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
      line_(line), column_(column), reason_(reason) {}

}  // namespace braidual
