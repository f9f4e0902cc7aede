#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

enum class ErrorKind {
    Dimension,
    Singular,
    Contract,
    Degenerate,
    Capacity,
    NonConvergence,
    Unsupported,
    Input,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// to a process exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition) {
        fail(kind, what);
    }
}

} // namespace qmat
