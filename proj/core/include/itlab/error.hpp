#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itlab
{
    /// Base class of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed instance text or JSON. Carries the 1-based line number
    /// (0 when the error is not tied to a line, e.g. JSON input).
    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, const std::string & message) :
            Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /// Raised by generators when a construction cannot be realised for the
    /// requested parameters (unsupported regime, retry budget exhausted).
    class ConstructionError : public Error
    {
    public:
        using Error::Error;
    };
}
