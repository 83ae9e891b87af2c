#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gapbound/rational.hpp"

namespace gapbound {

/// Polynomial degree; the zero polynomial has a degree below every integer,
/// which is a distinct state rather than -1 so it can never leak into arithmetic.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(long value) : finite_(true), value_(value) {}

    constexpr bool is_finite() const noexcept { return finite_; }
    /// Throws std::logic_error for the zero-polynomial sentinel.
    long value() const;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() = default;
    bool finite_ = false;
    long value_ = 0;
};

/// Dense univariate polynomial over Q in the variable t.
/// coefficients()[k] is the coefficient of t^k; the last stored entry is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const BigRational& constant);  // NOLINT
    Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT
    explicit Polynomial(std::vector<BigRational> coefficients);
    Polynomial(std::initializer_list<BigRational> coefficients)
        : Polynomial(std::vector<BigRational>(coefficients)) {}

    static Polynomial variable() { return Polynomial({0, 1}); }
    static Polynomial monomial(const BigRational& coeff, std::size_t exponent);

    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of t^k (zero beyond the stored range).
    BigRational coefficient(std::size_t k) const;
    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::minus_infinity() : Degree(static_cast<long>(coeffs_.size()) - 1);
    }
    /// Degree as an integer; throws ZeroPolynomial on the zero polynomial.
    long deg() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == BigRational(1); }
    const BigRational& leading_coefficient() const;

    Polynomial monic() const;
    Polynomial derivative() const;
    BigRational evaluate(const BigRational& at) const;
    /// t -> t + shift.
    Polynomial shifted(const BigRational& shift) const;
    /// t^d p(1/t) with d = deg p.
    Polynomial reversed() const;
    /// Multiplicity of t as a factor (the lowest nonzero exponent); zero polynomial throws.
    std::size_t low_order() const;
    /// Drops the factor t^low_order().
    Polynomial without_low_order() const;
    Polynomial pow(unsigned long exponent) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending-order human form, e.g. "t^3 - 1/2*t + 4"; reparses to the same polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DivideByZeroPolynomial.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::logic_error if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Strict weak order used to emit deterministic lists: by degree, then by
/// coefficients from the constant term upward.
bool canonical_less(const Polynomial& a, const Polynomial& b);

struct SquarefreeFactor {
    Polynomial factor;       // monic, squarefree, nonconstant
    unsigned multiplicity;   // strictly increasing along the decomposition
    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = lc(p) * prod factor^multiplicity (Yun); constants give an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Product of the distinct monic irreducible factors of p.
Polynomial radical(const Polynomial& p);

/// Gcd-free basis of monic squarefree nonconstant inputs, in canonical order.
std::vector<Polynomial> coprime_refine(const std::vector<Polynomial>& polys);

}  // namespace gapbound
