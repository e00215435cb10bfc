#pragma once

#include <stdexcept>
#include <string>

namespace propb {

enum class ErrorKind {
    Parameter,    // l > k, l = 0, overflow of derived sizes
    Divisibility, // l does not divide k
    Index,        // vertex / slot / shift out of range
    Construction, // wrong cardinalities handed to edge_from
    Size,         // resource cap exceeded
    Input,        // malformed or partial coloring, bad DIMACS, bad prefix
    Majority,     // derandomized_shifts precondition violated
    Domain,       // r > n in the binomial bound
    Budget,       // DPLL node budget exhausted
    Assertion     // an invariant failed: implementation bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void check(bool cond, ErrorKind kind, const char* what) {
    if (!cond) fail(kind, what);
}

} // namespace propb
