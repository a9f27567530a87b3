#pragma once

#include <stdexcept>
#include <string>

namespace weierstab {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division_by_zero", "division by zero") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string field = {})
        : Error("parse_error", what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error("parameter_error", what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition_error", what) {}
};

} // namespace weierstab
