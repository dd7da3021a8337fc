#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    InvalidArgument,  ///< bad exponents, indices, or parameters
    BadInput,         ///< malformed weight file or weight values
    Degenerate,       ///< zero denominator, empty set, or no admissible seed
    NumericFailure,   ///< an iteration failed to reach its tolerance
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) fail(kind, what);
}

}  // namespace hardy
