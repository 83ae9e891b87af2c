#include "gapbound/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dense_kernels.hpp"
#include "gapbound/error.hpp"

namespace gapbound {

long Degree::value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no integer value");
    return value_;
}

Polynomial::Polynomial(const BigRational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const BigRational& coeff, std::size_t exponent) {
    if (coeff.is_zero()) return {};
    std::vector<BigRational> c(exponent + 1);
    c[exponent] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(); }

long Polynomial::deg() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    return static_cast<long>(coeffs_.size()) - 1;
}

const BigRational& Polynomial::leading_coefficient() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial out = *this;
    BigRational inv = BigRational(1) / coeffs_.back();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigRational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

BigRational Polynomial::evaluate(const BigRational& at) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::shifted(const BigRational& shift) const {
    if (shift.is_zero() || coeffs_.size() <= 1) return *this;
    // Horner in the shifted variable (Taylor shift).
    std::vector<BigRational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += shift * c[j + 1];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed() const {
    std::vector<BigRational> c(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(c));
}

std::size_t Polynomial::low_order() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of the zero polynomial");
    std::size_t k = 0;
    while (coeffs_[k].is_zero()) ++k;
    return k;
}

Polynomial Polynomial::without_low_order() const {
    std::size_t k = low_order();
    return Polynomial(std::vector<BigRational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Polynomial Polynomial::pow(unsigned long exponent) const {
    Polynomial result(1), base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

namespace {

using detail::to_scaled;

BigInt content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<BigInt>& v) {
    BigInt g = content(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void trim_int(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b over Z (b nonzero).
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
        BigInt la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
        trim_int(a);
    }
    return a;
}

}  // namespace

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    auto a = to_scaled(coeffs_);
    auto b = to_scaled(o.coeffs_);
    std::vector<BigInt> prod(a.scaled.size() + b.scaled.size() - 1);
    for (std::size_t i = 0; i < a.scaled.size(); ++i) {
        if (a.scaled[i] == 0) continue;
        for (std::size_t j = 0; j < b.scaled.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), a.scaled[i].get_mpz_t(), b.scaled[j].get_mpz_t());
    }
    BigInt den = a.denominator * b.denominator;
    coeffs_.clear();
    coeffs_.reserve(prod.size());
    for (auto& p : prod) coeffs_.emplace_back(p, den);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c.is_zero()) continue;
        BigRational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != BigRational(1)) os << mag << "*";
        os << "t";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivideByZeroPolynomial, "divrem by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<BigRational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRational> quot(rem.size() - db);
    BigRational inv_lead = BigRational(1) / bc.back();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        BigRational q = rem[k] * inv_lead;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

bool divides(const Polynomial& b, const Polynomial& a) { return divrem(a, b).second.is_zero(); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    // Primitive PRS over Z keeps coefficient growth in check.
    auto u = to_scaled(a.coefficients()).scaled;
    auto v = to_scaled(b.coefficients()).scaled;
    make_primitive(u);
    make_primitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = pseudo_remainder(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<BigRational> c;
    c.reserve(u.size());
    for (auto& x : u) c.emplace_back(x);
    return Polynomial(std::move(c)).monic();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    // Yun's algorithm (characteristic zero).
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = exact_quotient(f, a);
    Polynomial c = exact_quotient(df, a) - b.derivative();
    unsigned i = 1;
    while (!b.is_constant()) {
        Polynomial d = gcd(b, c);
        if (!d.is_constant()) out.push_back({d, i});
        b = exact_quotient(b, d);
        c = exact_quotient(c, d) - b.derivative();
        ++i;
    }
    return out;
}

Polynomial radical(const Polynomial& p) {
    Polynomial out(1);
    for (const auto& sf : squarefree_decomposition(p)) out *= sf.factor;
    return out;
}

std::vector<Polynomial> coprime_refine(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> basis;
    for (const auto& p : polys) {
        if (p.is_constant()) throw Error(ErrorKind::InvalidCluster, "coprime_refine input must be nonconstant");
        basis.push_back(p.monic());
    }
    // Replace any non-coprime pair (a, b) by g, a/g, b/g; total degree strictly drops.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(basis.begin(), basis.end(), canonical_less);
        basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Polynomial g = gcd(basis[i], basis[j]);
                if (g.is_constant()) continue;
                Polynomial a = exact_quotient(basis[i], g).monic();
                Polynomial b = exact_quotient(basis[j], g).monic();
                basis.erase(basis.begin() + static_cast<long>(j));
                basis.erase(basis.begin() + static_cast<long>(i));
                basis.push_back(g);
                if (!a.is_constant()) basis.push_back(a);
                if (!b.is_constant()) basis.push_back(b);
                changed = true;
            }
        }
    }
    return basis;
}

}  // namespace gapbound
