#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gapbound {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT: implicit by design of numeric literals
    BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Accepts "p", "-p", "p/q".
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Serialized as "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Exponent may be negative for nonzero values.
    BigRational pow(long exponent) const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Falling factorial a(a-1)...(a-j+1); ff(a, 0) = 1.
BigInt falling_factorial(long a, long j);

/// Always "p/q" form, including "p/1" for integers; the wire format for reports.
std::string to_fraction_string(const BigRational& r);

}  // namespace gapbound
