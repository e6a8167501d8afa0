#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwpa {

enum class ErrorKind {
    AmbientMismatch,
    UnknownVariable,
    NotUnivariate,
    MissingImage,
    NotAffine,
    InvalidArgument,
    AlgebraMismatch,
    NotPoissonCentral,
    JacobiFailure,
    NotAntisymmetric,
    Parse,
    Validation,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to diagnostics without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorKind::Parse, what + " (line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ")"),
          line_(line),
          column_(column),
          message_(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace gwpa
