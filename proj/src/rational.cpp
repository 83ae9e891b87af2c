#include "gapbound/rational.hpp"

#include <ostream>

#include "gapbound/error.hpp"

namespace gapbound {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivideByZeroPolynomial: return "DivideByZeroPolynomial";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
        case ErrorKind::ConstantFunction: return "ConstantFunction";
        case ErrorKind::HeterogeneousCluster: return "HeterogeneousCluster";
        case ErrorKind::InvalidCluster: return "InvalidCluster";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::DivisorNotUnit: return "DivisorNotUnit";
        case ErrorKind::InnerSeriesNotVanishing: return "InnerSeriesNotVanishing";
        case ErrorKind::NotALocalParameter: return "NotALocalParameter";
        case ErrorKind::ConstantParameter: return "ConstantParameter";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::PolynomialInParameter: return "PolynomialInParameter";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::InsufficientGapTerms: return "InsufficientGapTerms";
        case ErrorKind::ValuationMismatch: return "ValuationMismatch";
        case ErrorKind::PartitionGap: return "PartitionGap";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::VerificationFailure: return "VerificationFailure";
    }
    return "UnknownError";
}

ErrorCategory category(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SyntaxError:
        case ErrorKind::NonIntegerExponent:
        case ErrorKind::ConfigError:
            return ErrorCategory::Usage;
        case ErrorKind::NegativeWeight:
        case ErrorKind::ValuationMismatch:
        case ErrorKind::PartitionGap:
        case ErrorKind::VerificationFailure:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::Precondition;
    }
}

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    q.canonicalize();
    return BigRational(q);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::string BigRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return BigRational(1) / pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigInt falling_factorial(long a, long j) {
    BigInt out = 1;
    for (long k = 0; k < j; ++k) out *= BigInt(a - k);
    return out;
}

std::string to_fraction_string(const BigRational& r) {
    return r.numerator().get_str() + "/" + r.denominator().get_str();
}

}  // namespace gapbound
