#include "mtclab/error.hpp"

namespace mtclab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::VertexNotFound: return "VertexNotFound";
        case ErrorKind::DuplicateVertex: return "DuplicateVertex";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::TooManyVertices: return "TooManyVertices";
        case ErrorKind::UnsupportedBound: return "UnsupportedBound";
        case ErrorKind::InvalidExclusion: return "InvalidExclusion";
        case ErrorKind::EmptyPart: return "EmptyPart";
        case ErrorKind::PartitionMismatch: return "PartitionMismatch";
        case ErrorKind::MissingCrossArc: return "MissingCrossArc";
        case ErrorKind::DoubleOrientation: return "DoubleOrientation";
        case ErrorKind::IntraPartArc: return "IntraPartArc";
        case ErrorKind::TooFewParts: return "TooFewParts";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
        case ErrorKind::NotLoose: return "NotLoose";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::UnknownTheorem: return "UnknownTheorem";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message, std::size_t line) {
    std::string out(to_string(kind));
    if (line != 0) {
        out += " (line " + std::to_string(line) + ")";
    }
    if (!message.empty()) {
        out += ": " + message;
    }
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(format_message(kind, message, line)), kind_(kind), detail_(message), line_(line) {}

}  // namespace mtclab
