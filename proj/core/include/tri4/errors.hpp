#ifndef TRI4_ERRORS_HPP
#define TRI4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tri4 {

// Bad input or misuse of an operation's contract. The CLI maps this to
// exit code 1.
class UserError : public std::runtime_error {
public:
    explicit UserError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (e.g. the trisection identity failing after
// a pipeline run). Indicates a bug, not bad input. CLI exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace tri4

#endif
