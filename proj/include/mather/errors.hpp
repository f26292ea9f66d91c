#ifndef MATHER_ERRORS_HPP
#define MATHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mather {

// Domain errors carry a stable machine-readable code; the CLI maps them to
// exit status 3. Argument-range problems use ValidationError (exit status 2).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct NonProperClass : DomainError {
    explicit NonProperClass(const std::string& message)
        : DomainError("NonProperClass", message) {}
};

struct ZeroClass : DomainError {
    explicit ZeroClass(const std::string& message)
        : DomainError("ZeroClass", message) {}
};

struct DegenerateDual : DomainError {
    explicit DegenerateDual(const std::string& message)
        : DomainError("DegenerateDual", message) {}
};

struct InconsistentConstraints : DomainError {
    explicit InconsistentConstraints(const std::string& message)
        : DomainError("InconsistentConstraints", message) {}
};

struct NotDivisible : DomainError {
    explicit NotDivisible(const std::string& message)
        : DomainError("NotDivisible", message) {}
};

struct AmbientOdd : DomainError {
    explicit AmbientOdd(const std::string& message)
        : DomainError("AmbientOdd", message) {}
};

struct DimensionMismatch : DomainError {
    explicit DimensionMismatch(const std::string& message)
        : DomainError("DimensionMismatch", message) {}
};

struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& message)
        : std::invalid_argument(message) {}
};

}  // namespace mather

#endif
