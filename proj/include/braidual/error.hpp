#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidual {

enum class ErrorKind {
    ShapeMismatch,
    Singular,
    NoAntipode,
    PrecheckFailed,
    AntipodeNotInvertible,
    InvalidParameter,
    Parse,
    NotClosed,
    Validation,
    Limit,
    Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

}  // namespace braidual
