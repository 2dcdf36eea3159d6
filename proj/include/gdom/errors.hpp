#pragma once

#include <stdexcept>
#include <string>

namespace gdom
{
    /// Malformed graph or certificate text. `line` is 1-based, 0 when not tied to a line.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, const std::string & what) :
            std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }

    private:
        int _line;
    };

    /// A precondition on numeric parameters or input shapes was violated.
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// The requested variant admits no certificate on this graph (isolated vertex for total variants).
    class InfeasibleError : public std::runtime_error
    {
    public:
        InfeasibleError(int vertex, const std::string & what) :
            std::runtime_error(what + " (isolated vertex " + std::to_string(vertex) + ")"),
            _vertex(vertex)
        {
        }

        auto vertex() const -> int { return _vertex; }

    private:
        int _vertex;
    };

    /// An enumeration or exact search was asked to run beyond its supported order.
    class SizeGuardError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
