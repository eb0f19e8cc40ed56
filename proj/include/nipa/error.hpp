#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nipa {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidNode : public Error { using Error::Error; };
class InvalidEdge : public Error { using Error::Error; };
class EmptyGraph : public Error { using Error::Error; };
class InvalidSpec : public Error { using Error::Error; };
class InvalidInput : public Error { using Error::Error; };
class InvalidCurve : public Error { using Error::Error; };
class InvalidQ : public Error { using Error::Error; };
class NoMutationPossible : public Error { using Error::Error; };
class TooLarge : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error("config field '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace nipa
