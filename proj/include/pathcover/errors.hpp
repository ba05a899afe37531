#ifndef PATHCOVER_ERRORS_HPP
#define PATHCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathcover {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(int line_no, const std::string& what_arg)
        : Error("parse error at line " + std::to_string(line_no) + ": " + what_arg),
          line(line_no) {}
    int line;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(int vertex)
        : Error("self-loop at vertex " + std::to_string(vertex)), v(vertex) {}
    int v;
};

struct TwoCycleError : Error {
    TwoCycleError(int a, int b)
        : Error("2-cycle between " + std::to_string(a) + " and " + std::to_string(b)),
          u(a), v(b) {}
    int u, v;
};

struct VertexRangeError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct NotAPseudoPathError : Error {
    using Error::Error;
};

struct EmptyGraphError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

} // namespace pathcover

#endif
