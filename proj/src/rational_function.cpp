#include "gapbound/rational_function.hpp"

#include "gapbound/error.hpp"

namespace gapbound {

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(1) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(ErrorKind::DivideByZeroPolynomial, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    BigRational lead = den_.leading_coefficient();
    if (lead != BigRational(1)) {
        BigRational inv = BigRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::derivative() const {
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroFunction, "inverse of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction out;
    out.num_ = num_.pow(static_cast<unsigned long>(exponent));
    out.den_ = den_.pow(static_cast<unsigned long>(exponent));
    return out;  // powers of coprime, monic-denominator pairs stay normalized
}

RationalFunction RationalFunction::shifted(const BigRational& shift) const {
    return RationalFunction(num_.shifted(shift), den_.shifted(shift));
}

RationalFunction RationalFunction::at_reciprocal() const {
    if (is_zero()) return *this;
    // num(1/t)/den(1/t) = t^(dd-dn) rev(num)/rev(den)
    long dn = num_.deg(), dd = den_.deg();
    Polynomial n = num_.reversed(), d = den_.reversed();
    if (dd > dn)
        n *= Polynomial::monomial(1, static_cast<std::size_t>(dd - dn));
    else if (dn > dd)
        d *= Polynomial::monomial(1, static_cast<std::size_t>(dn - dd));
    return RationalFunction(n, d);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    auto eval = [&](const Polynomial& p) {
        RationalFunction acc;
        const auto& c = p.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RationalFunction(*it);
        return acc;
    };
    return eval(num_) / eval(den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // Cross-cancel before multiplying to keep degrees small.
    Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Polynomial a = exact_quotient(num_, g1), b = exact_quotient(o.num_, g2);
    Polynomial c = exact_quotient(den_, g2), d = exact_quotient(o.den_, g1);
    num_ = a * b;
    den_ = c * d;
    if (num_.is_zero()) den_ = Polynomial(1);
    BigRational lead = den_.leading_coefficient();
    if (lead != BigRational(1)) {
        BigRational inv = BigRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivideByZeroPolynomial, "division by the zero function");
    return *this *= o.inverse();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial(1)) return num_.to_string();
    auto wrap = [](const Polynomial& p) {
        bool atomic = p.is_constant() && p.leading_coefficient().is_integer() && p.leading_coefficient().sign() > 0;
        return atomic ? p.to_string() : "(" + p.to_string() + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace gapbound
