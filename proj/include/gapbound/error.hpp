#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapbound {

enum class ErrorKind {
    // exact-algebra
    DivideByZeroPolynomial,
    ZeroPolynomial,
    ZeroFunction,
    ConstantFunction,
    HeterogeneousCluster,
    InvalidCluster,
    // series-engine
    WindowTooSmall,
    DivisorNotUnit,
    InnerSeriesNotVanishing,
    NotALocalParameter,
    ConstantParameter,
    // gap-analysis
    NotNormalized,
    PolynomialInParameter,
    NegativeWeight,
    // lemma-lab
    InsufficientGapTerms,
    ValuationMismatch,
    PartitionGap,
    // harness
    SyntaxError,
    NonIntegerExponent,
    ConfigError,
    // a proven inequality failed: always an implementation bug
    VerificationFailure,
};

/// How a failure should be reported to a caller of the command-line tool.
enum class ErrorCategory {
    Usage,         // malformed input
    Precondition,  // well-formed input that violates a hypothesis
    Internal,      // an oracle check failed
};

std::string_view to_string(ErrorKind kind) noexcept;
ErrorCategory category(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures carry the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what, ErrorKind kind = ErrorKind::SyntaxError)
        : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace gapbound
