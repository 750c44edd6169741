#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Broad failure classes; the CLI maps these onto exit codes.
enum class ErrorKind {
    Mismatch,        // a computed value disagrees with its closed form
    Arithmetic,      // integer certification failed
    Limit,           // precision or size limit
    BadArgument,     // caller error
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct NotAnInteger : Error {
    explicit NotAnInteger(const std::string& w) : Error(ErrorKind::Arithmetic, w) {}
};
struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& w) : Error(ErrorKind::Limit, w) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w) : Error(ErrorKind::Limit, w) {}
};
struct BadArgument : Error {
    explicit BadArgument(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};

}  // namespace siegel
