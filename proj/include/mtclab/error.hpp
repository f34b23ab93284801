#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtclab {

enum class ErrorKind {
    VertexNotFound,
    DuplicateVertex,
    SelfLoop,
    TooManyVertices,
    UnsupportedBound,
    InvalidExclusion,
    EmptyPart,
    PartitionMismatch,
    MissingCrossArc,
    DoubleOrientation,
    IntraPartArc,
    TooFewParts,
    EnumerationTooLarge,
    SameVertex,
    VertexSetMismatch,
    NotLoose,
    InstanceTooLarge,
    UnknownTheorem,
    ConfigError,
    SyntaxError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
/// `line` is set only for errors raised while parsing an MTD document.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
    std::size_t line_;
};

}  // namespace mtclab
