#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mcg3 {

// Domain failure with a stable machine-readable code next to the human text.
// Codes are part of the tool's output contract (CLI error JSON), so they are
// kept in one inventory below and never invented ad hoc.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* DeterminantInvalid = "DeterminantInvalid";
inline constexpr const char* NotHyperbolic = "NotHyperbolic";
inline constexpr const char* SyntaxError = "SyntaxError";
inline constexpr const char* RewriteFuelExceeded = "RewriteFuelExceeded";
inline constexpr const char* OrientationReversing = "OrientationReversing";
inline constexpr const char* NotPurePermutationTrivial = "NotPurePermutationTrivial";
inline constexpr const char* NotCoprime = "NotCoprime";
inline constexpr const char* NotPositive = "NotPositive";
inline constexpr const char* NotPositiveCore = "NotPositiveCore";
inline constexpr const char* InvalidParams = "InvalidParams";
inline constexpr const char* NotReduced = "NotReduced";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace mcg3
