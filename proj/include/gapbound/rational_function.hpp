#pragma once

#include <string>

#include "gapbound/polynomial.hpp"

namespace gapbound {

/// Element of Q(t) in normal form: gcd(num, den) = 1 and den monic.
/// Two rational functions are equal exactly when their representations are.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& num);  // NOLINT
    RationalFunction(const BigRational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
    /// Throws DivideByZeroPolynomial if den is zero.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    /// d/dt.
    RationalFunction derivative() const;
    /// Integer powers; negative exponents invert (throws on zero).
    RationalFunction pow(long exponent) const;
    RationalFunction inverse() const;
    /// t -> t + shift.
    RationalFunction shifted(const BigRational& shift) const;
    /// f(1/t).
    RationalFunction at_reciprocal() const;
    /// g(t) -> g(inner(t)).
    RationalFunction compose(const RationalFunction& inner) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// Canonical string, e.g. "(t^2 + 2*t + 1)/(t - 1)"; reparses to an equal function.
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace gapbound
